#include "p1split/ratfunc.hpp"

#include <utility>

#include "p1split/errors.hpp"

namespace p1split {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Rat lc = den_.leading();
    if (lc != 1) {
        num_ = num_ * Poly(Rat(1) / lc);
        den_ = den_.monic();
    }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    const long lo = std::min(0L, p.ord());
    std::vector<Rat> c(static_cast<std::size_t>(p.deg() - lo + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - lo)] = v;
    return RatFunc(Poly(std::move(c)), Poly::monomial(Rat(1), static_cast<std::size_t>(-lo)));
}

std::optional<LaurentPoly> RatFunc::to_laurent() const {
    if (den_.degree() != static_cast<long>(den_.valuation())) return std::nullopt;
    const long shift = -static_cast<long>(den_.degree());
    LaurentPoly::Terms terms;
    for (std::size_t k = 0; k < num_.coeffs().size(); ++k)
        if (num_.coeffs()[k] != 0) terms.emplace(static_cast<long>(k) + shift, num_.coeffs()[k]);
    return LaurentPoly(std::move(terms));
}

std::optional<long> RatFunc::order_at_zero() const {
    if (num_.is_zero()) return std::nullopt;
    return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

std::optional<long> RatFunc::order_at_infinity() const {
    if (num_.is_zero()) return std::nullopt;
    return den_.degree() - num_.degree();
}

Rat RatFunc::eval(const Rat& z) const {
    const Rat d = den_.eval(z);
    if (d == 0) throw DomainError("rational function evaluated at a pole");
    return num_.eval(z) / d;
}

RatFunc RatFunc::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RatFunc RatFunc::shifted(const Rat& a) const {
    return {num_.shifted(a), den_.shifted(a)};
}

RatFunc RatFunc::inverted_argument() const {
    // num(1/t)/den(1/t) = t^(dd - dn) rev(num)/rev(den)
    if (num_.is_zero()) return {};
    const long diff = den_.degree() - num_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (diff > 0)
        n = n * Poly::monomial(Rat(1), static_cast<std::size_t>(diff));
    else if (diff < 0)
        d = d * Poly::monomial(Rat(1), static_cast<std::size_t>(-diff));
    return {std::move(n), std::move(d)};
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DomainError("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return RatFunc(1) / pow(-e);
    return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    const auto wrap = [&](const Poly& p) {
        const bool single = p.coeffs().size() - p.valuation() == 1;
        return single ? p.to_string(var) : "(" + p.to_string(var) + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::optional<RatFuncMatrix> inverse(const RatFuncMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatFuncMatrix a = m;
    RatFuncMatrix inv = RatFuncMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);
        const RatFunc p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const RatFunc f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RatFuncMatrix derivative(const RatFuncMatrix& m) {
    RatFuncMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).derivative();
    return out;
}

}  // namespace p1split
