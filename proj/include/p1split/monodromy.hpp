#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p1split/linalg.hpp"

namespace p1split {

// Images M_1, ..., M_N of the loops around the marked points, in loop order.
// Monodromy is an anti-homomorphism: the loop gamma_1 gamma_2 (first gamma_1)
// maps to M_2 M_1.
class MonodromyRep {
public:
    // Throws DimensionMismatch for ragged input and NotInvertible for a singular matrix.
    explicit MonodromyRep(std::vector<RatMatrix> matrices);

    std::size_t dimension() const { return n_; }
    const std::vector<RatMatrix>& matrices() const { return matrices_; }

    MonodromyRep conjugated(const RatMatrix& s) const;

private:
    std::size_t n_ = 0;
    std::vector<RatMatrix> matrices_;
};

// Image of the concatenated loop gamma_{w[0]} gamma_{w[1]} ... (indices into the
// generator list), i.e. M_{w[last]} ... M_{w[0]}.
RatMatrix loop_image(const MonodromyRep& rep, const std::vector<std::size_t>& word);

// M_1 M_2 ... M_N == I in stored order.
bool check_product_identity(const MonodromyRep& rep);

// Dimension of the unital algebra spanned by words in the generators.
std::size_t word_span_dimension(const MonodromyRep& rep);

// Burnside: irreducible over C iff the generated algebra is all of M_n.
bool is_irreducible(const MonodromyRep& rep);

// Smallest proper coordinate subspace span{e_i : i in S} fixed by every
// generator (0-based indices), when one exists. Only searched for n <= 16.
std::optional<std::vector<std::size_t>> invariant_coordinate_subspace(const MonodromyRep& rep);

struct JordanProfile {
    std::optional<Rat> single_eigenvalue;
    bool single_block = false;
};

// A rational matrix with a single eigenvalue has it equal to trace / n, so the
// test is exact over Q.
JordanProfile jordan_profile(const RatMatrix& m);

struct CriterionReport {
    bool dimension_at_least_four = false;
    bool product_is_identity = false;
    bool reducible = false;
    bool all_single_block = false;
    std::vector<JordanProfile> profiles;
    // Product of the single eigenvalues; empty when some generator has several.
    std::optional<Rat> eigenvalue_product;
    std::optional<std::vector<std::size_t>> witness;
    bool applies = false;
    std::string reason;
};

// When `applies` is true the representation is not the monodromy of any
// Fuchsian system on the sphere.
CriterionReport bolibrukh_criterion(const MonodromyRep& rep);

// The three-point rank-4 counterexample.
MonodromyRep bolibrukh_example();

}  // namespace p1split
