#include "p1split/poly.hpp"

#include <algorithm>
#include <set>

#include "p1split/errors.hpp"
#include "p1split/linalg.hpp"

namespace p1split {

Poly::Poly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::valuation() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k;
}

Rat Poly::eval(const Rat& z) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (coeffs_.empty()) return {};
    Poly out = *this;
    const Rat lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

Poly Poly::shifted(const Rat& a) const {
    // Horner in the shifted variable: p(z + a) = (...(c_n (z+a) + c_{n-1})(z+a) ...)
    Poly acc;
    const Poly lin(std::vector<Rat>{a, Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

Poly Poly::reversed() const {
    std::vector<Rat> r(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(r));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rat lc = b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = quo.size(); i-- > 0;) {
        const Rat q = rem[i + db] / lc;
        quo[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::pow(unsigned e) const {
    Poly out(1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1U) out *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (k == 0) {
            out += p1split::to_string(mag);
            continue;
        }
        if (!unit) out += p1split::to_string(mag) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        Rat r = 1;
        for (std::size_t i = 0; i < n; ++i) r *= a.leading();
        return r;
    }
    if (n == 0) {
        Rat r = 1;
        for (std::size_t i = 0; i < m; ++i) r *= b.leading();
        return r;
    }
    const std::size_t size = m + n;
    RatMatrix syl(size, size);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) syl(r, r + j) = a.coeff(m - j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) syl(n + r, r + j) = b.coeff(n - j);
    return det(syl);
}

namespace {

// Positive divisors of |v|. Trial division up to 10^6; a leftover cofactor is
// treated as prime, which is exact whenever it has no factor below 10^12.
std::vector<Int> divisors(const Int& value) {
    Int v = abs(value);
    std::vector<std::pair<Int, unsigned>> factors;
    for (unsigned long p = 2; p <= 1000000UL && Int(p) * p <= v; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
            v /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(Int(p), e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly& p) {
    std::vector<RationalRoot> out;
    if (p.degree() <= 0) return out;

    Poly rest = p;
    if (const std::size_t v = rest.valuation(); v > 0) {
        out.push_back({Rat(0), v});
        std::vector<Rat> c(rest.coeffs().begin() + static_cast<long>(v), rest.coeffs().end());
        rest = Poly(std::move(c));
    }
    if (rest.degree() <= 0) return out;

    // Primitive integer multiple of the squarefree part.
    Poly sf = squarefree_part(rest);
    Int den_lcm = 1;
    for (const auto& c : sf.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    const Int a0 = Rat(sf.coeff(0) * den_lcm).get_num();
    const Int an = Rat(sf.leading() * den_lcm).get_num();

    std::set<Rat> candidates;
    const auto num_divs = divisors(a0);
    const auto den_divs = divisors(an);
    for (const auto& pn : num_divs)
        for (const auto& qd : den_divs) {
            Rat r(pn, qd);
            r.canonicalize();
            candidates.insert(r);
            candidates.insert(-r);
        }

    for (const auto& r : candidates) {
        if (sf.eval(r) != 0) continue;
        const Poly lin(std::vector<Rat>{-r, Rat(1)});
        std::size_t mult = 0;
        for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

Poly falling_factorial(std::size_t k) {
    Poly out(1);
    for (std::size_t j = 0; j < k; ++j) out *= Poly(std::vector<Rat>{Rat(-static_cast<long>(j)), Rat(1)});
    return out;
}

}  // namespace p1split
