#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "p1split/matrix.hpp"
#include "p1split/rational.hpp"

namespace p1split {

// Sparse Laurent polynomial in one variable x over Q: exponent -> coefficient.
// Zero coefficients are never stored, so the zero polynomial has no terms.
class LaurentPoly {
public:
    using Terms = std::map<long, Rat>;

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rat& c);                   // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(const Rat& c, long exponent);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rat coeff(long exponent) const;

    // Lowest and highest exponent. Precondition: nonzero.
    long ord() const;
    long deg() const;

    bool has_negative_exponents() const { return !terms_.empty() && terms_.begin()->first < 0; }
    bool has_positive_exponents() const { return !terms_.empty() && terms_.rbegin()->first > 0; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    // Multiplication by x^k.
    LaurentPoly shifted(long k) const;
    // p(1/x)
    LaurentPoly reflected() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator-(LaurentPoly a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // Canonical text in ascending exponent order, e.g. "-x^-1 + 2 + 3/2*x^2".
    std::string to_string(const std::string& var = "x") const;

private:
    Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

struct LaurentUnit {
    Rat coeff;
    long exponent;
};

// (c, t) iff p = c x^t with c != 0.
std::optional<LaurentUnit> is_laurent_unit(const LaurentPoly& p);

using LaurentMatrix = Matrix<LaurentPoly>;

LaurentPoly det(const LaurentMatrix& a);
LaurentMatrix adjugate(const LaurentMatrix& a);

// Adjugate divided by the unit determinant; throws NotInvertibleOverLaurentRing.
LaurentMatrix matrix_inverse(const LaurentMatrix& a);

LaurentMatrix diag_monomials(const std::vector<long>& exponents);

// Range of exponents over all nonzero entries; nullopt for the zero matrix.
std::optional<long> min_exponent(const LaurentMatrix& a);
std::optional<long> max_exponent(const LaurentMatrix& a);

LaurentMatrix shifted(const LaurentMatrix& a, long k);
LaurentMatrix reflected(const LaurentMatrix& a);

}  // namespace p1split
