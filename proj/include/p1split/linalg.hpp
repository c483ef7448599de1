#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "p1split/matrix.hpp"
#include "p1split/poly.hpp"
#include "p1split/rational.hpp"

namespace p1split {

using RatMatrix = Matrix<Rat>;
using RatVector = std::vector<Rat>;

struct RowEchelon {
    RatMatrix reduced;                // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Fraction-free (Bareiss) forward elimination on an integer-scaled copy,
// followed by rational back substitution.
RowEchelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of the right kernel. One vector per free column in ascending order,
// with a 1 in that column and zeros in the other free columns.
std::vector<RatVector> nullspace(const RatMatrix& m);

Rat det(const RatMatrix& m);

// Unique solution of m x = b for square nonsingular m; nullopt if singular.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// det(lambda I - m), monic.
Poly charpoly(const RatMatrix& m);

// Incrementally maintained row-reduced basis of a subspace of Q^dim.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    // Adds v if it is independent of the current span; returns whether it was added.
    bool insert(const RatVector& v);
    bool contains(const RatVector& v) const;

    std::size_t size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    RatVector reduce(RatVector v) const;

    std::size_t dim_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace p1split
