#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "p1split/rational.hpp"

namespace p1split {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// Trailing zeros are never stored; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rat& c);            // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rat> coeffs);

    static Poly monomial(const Rat& c, std::size_t degree);
    static Poly x() { return monomial(Rat(1), 1); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

    // Multiplicity of the root 0.
    std::size_t valuation() const;

    Rat eval(const Rat& z) const;
    Poly derivative() const;
    Poly monic() const;
    // p(z + a)
    Poly shifted(const Rat& a) const;
    // z^deg * p(1/z)
    Poly reversed() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division; throws DomainError on a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly pow(unsigned e) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rat> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly squarefree_part(const Poly& p);

// Sylvester-matrix resultant.
Rat resultant(const Poly& a, const Poly& b);

struct RationalRoot {
    Rat value;
    std::size_t multiplicity;
};

// All rational roots with multiplicity, ascending.
std::vector<RationalRoot> rational_roots(const Poly& p);

// rho (rho - 1) ... (rho - k + 1)
Poly falling_factorial(std::size_t k);

}  // namespace p1split
