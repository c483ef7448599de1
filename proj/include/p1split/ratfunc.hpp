#pragma once

#include <optional>
#include <string>

#include "p1split/laurent.hpp"
#include "p1split/matrix.hpp"
#include "p1split/poly.hpp"

namespace p1split {

// Rational function num/den over Q with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(int c) : RatFunc(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    // Throws DomainError when den is zero.
    RatFunc(Poly num, Poly den);

    static RatFunc from_laurent(const LaurentPoly& p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Laurent form when the denominator is a power of x.
    std::optional<LaurentPoly> to_laurent() const;

    // Order of vanishing at z = 0 (negative for a pole); nullopt for zero.
    std::optional<long> order_at_zero() const;
    // Order of vanishing at infinity, deg den - deg num; nullopt for zero.
    std::optional<long> order_at_infinity() const;

    // Value at a point where f is finite; throws DomainError at a pole.
    Rat eval(const Rat& z) const;

    RatFunc derivative() const;
    // f(z + a)
    RatFunc shifted(const Rat& a) const;
    // f(1/t) as a rational function of t
    RatFunc inverted_argument() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(RatFunc a);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc pow(long e) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

using RatFuncMatrix = Matrix<RatFunc>;

// Gauss-Jordan over Q(z); nullopt when singular.
std::optional<RatFuncMatrix> inverse(const RatFuncMatrix& m);
RatFuncMatrix derivative(const RatFuncMatrix& m);

}  // namespace p1split
