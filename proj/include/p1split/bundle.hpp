#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "p1split/laurent.hpp"

namespace p1split {

// Vector bundle on the projective line given by its transition matrix A:
// a section of E(k) is a pair (s0, s1) with s0 polynomial in x, s1 polynomial
// in 1/x and s0 = x^k A s1. With this convention O(k) has transition x^k and
// h0(O(k)) = k + 1.
class BundleOnP1 {
public:
    // Throws InvalidBundle unless A is square with a Laurent-monomial determinant.
    explicit BundleOnP1(LaurentMatrix transition);

    static BundleOnP1 line(long k);
    static BundleOnP1 split(const std::vector<long>& indices);

    const LaurentMatrix& transition() const { return transition_; }
    const LaurentMatrix& inverse_transition() const { return inverse_; }
    std::size_t rank() const { return transition_.rows(); }
    const LaurentUnit& det_unit() const { return det_; }

private:
    LaurentMatrix transition_;
    LaurentMatrix inverse_;
    LaurentUnit det_;
};

// Grothendieck indices d1 >= ... >= dn.
struct SplittingType {
    std::vector<long> indices;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// B A C = diag(x^d1, ..., x^dn) with B over Q[x] and C over Q[1/x], both with
// constant nonzero determinant.
struct Factorization {
    LaurentMatrix b;
    LaurentMatrix c;
    SplittingType exponents;
};

struct Section {
    std::vector<LaurentPoly> s0;
    std::vector<LaurentPoly> s1;
};

struct SectionSpace {
    long twist = 0;
    std::size_t dimension = 0;
    std::vector<Section> basis;
};

struct VerificationReport {
    bool valid = false;
    // Empty when valid; otherwise the first violated clause.
    std::string failed_clause;
    std::string detail;
};

// Global sections of E(k). The kernel basis is in reduced echelon normal form
// over the coefficient layout of s1.
SectionSpace h0_dim(const BundleOnP1& e, long k);
std::size_t h0_count(const BundleOnP1& e, long k);

SplittingType splitting_type(const BundleOnP1& e);
Factorization birkhoff_factor(const BundleOnP1& e);

// Never throws.
VerificationReport verify_factorization(const LaurentMatrix& a, const Factorization& f);

BundleOnP1 dual(const BundleOnP1& e);
BundleOnP1 twist(const BundleOnP1& e, long k);
BundleOnP1 det_bundle(const BundleOnP1& e);
long degree(const BundleOnP1& e);

std::size_t h1_dim(const BundleOnP1& e, long k);
bool riemann_roch_check(const BundleOnP1& e, long k);
bool is_isomorphic(const BundleOnP1& e1, const BundleOnP1& e2);

}  // namespace p1split
