#include "p1split/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace p1split {

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

Rat LaurentPoly::coeff(long exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

long LaurentPoly::ord() const {
    if (terms_.empty()) throw DomainError("ord of the zero Laurent polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::deg() const {
    if (terms_.empty()) throw DomainError("deg of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

LaurentPoly LaurentPoly::reflected() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (inserted) continue;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (inserted) continue;
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.emplace(ea + eb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& kv : a.terms_) kv.second = -kv.second;
    return a;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += p1split::to_string(mag);
            continue;
        }
        if (mag != 1) out += p1split::to_string(mag) + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
    return p * q;
}

std::optional<LaurentUnit> is_laurent_unit(const LaurentPoly& p) {
    if (p.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    return LaurentUnit{c, e};
}

namespace {

// Determinant of the submatrix on the given rows and columns, by dynamic
// programming over column subsets (Laplace expansion without repeated minors).
LaurentPoly subset_det(const LaurentMatrix& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return LaurentPoly(1);
    if (n > 20) throw DimensionMismatch("determinant dimension too large");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<LaurentPoly> dp(std::size_t{1} << n);
    dp[0] = LaurentPoly(1);
    for (std::uint32_t s = 0; s < full; ++s) {
        if (dp[s].is_zero()) continue;
        const auto r = static_cast<std::size_t>(std::popcount(s));
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if ((s & bit) != 0) continue;
            const LaurentPoly& entry = a(rows[r], cols[c]);
            if (entry.is_zero()) continue;
            // Sign of the permutation grows by the number of used columns to the right of c.
            const int inversions = std::popcount(s >> (c + 1));
            LaurentPoly term = dp[s] * entry;
            if (inversions % 2 == 0)
                dp[s | bit] += term;
            else
                dp[s | bit] -= term;
        }
    }
    return dp[full];
}

std::vector<std::size_t> iota_except(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace

LaurentPoly det(const LaurentMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    return subset_det(a, iota_except(a.rows(), a.rows()), iota_except(a.cols(), a.cols()));
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("adjugate of a non-square matrix");
    const std::size_t n = a.rows();
    LaurentMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = LaurentPoly(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly minor = subset_det(a, iota_except(n, i), iota_except(n, j));
            adj(j, i) = (i + j) % 2 == 0 ? minor : -minor;
        }
    return adj;
}

LaurentMatrix matrix_inverse(const LaurentMatrix& a) {
    const auto unit = is_laurent_unit(det(a));
    if (!unit) throw NotInvertibleOverLaurentRing("determinant is not a Laurent monomial");
    const LaurentPoly inv_det = LaurentPoly::monomial(Rat(1) / unit->coeff, -unit->exponent);
    LaurentMatrix adj = adjugate(a);
    for (std::size_t i = 0; i < adj.rows(); ++i)
        for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) * inv_det;
    return adj;
}

LaurentMatrix diag_monomials(const std::vector<long>& exponents) {
    LaurentMatrix d(exponents.size(), exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) d(i, i) = LaurentPoly::monomial(Rat(1), exponents[i]);
    return d;
}

std::optional<long> min_exponent(const LaurentMatrix& a) {
    std::optional<long> out;
    for (const auto& p : a.data())
        if (!p.is_zero()) out = out ? std::min(*out, p.ord()) : p.ord();
    return out;
}

std::optional<long> max_exponent(const LaurentMatrix& a) {
    std::optional<long> out;
    for (const auto& p : a.data())
        if (!p.is_zero()) out = out ? std::max(*out, p.deg()) : p.deg();
    return out;
}

LaurentMatrix shifted(const LaurentMatrix& a, long k) {
    LaurentMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).shifted(k);
    return out;
}

LaurentMatrix reflected(const LaurentMatrix& a) {
    LaurentMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).reflected();
    return out;
}

}  // namespace p1split
