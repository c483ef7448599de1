#include "p1split/bundle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "p1split/errors.hpp"
#include "p1split/linalg.hpp"

namespace p1split {

namespace {

LaurentUnit checked_det(const LaurentMatrix& a) {
    if (!a.is_square() || a.rows() == 0) throw InvalidBundle("transition matrix must be square and nonempty");
    const auto unit = is_laurent_unit(det(a));
    if (!unit) throw InvalidBundle("determinant of the transition matrix is not a Laurent monomial");
    return *unit;
}

// The linear system for sections of E(k) with deg_{1/x} s1 <= bound. Unknown
// j * n + l is the coefficient of x^-j in s1[l]; one equation per negative
// exponent of each component of x^k A s1.
RatMatrix section_system(const LaurentMatrix& a, long k, long bound) {
    const std::size_t n = a.rows();
    const std::size_t unknowns = n * static_cast<std::size_t>(bound + 1);
    const long lowest = k + min_exponent(a).value_or(0) - bound;
    if (lowest >= 0) return RatMatrix(0, unknowns);
    const auto targets = static_cast<std::size_t>(-lowest);
    RatMatrix m(targets * n, unknowns);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (const auto& [e, c] : a(i, l).terms())
                for (long j = 0; j <= bound; ++j) {
                    const long t = k + e - j;
                    if (t >= 0) continue;
                    const auto row = static_cast<std::size_t>(t - lowest) * n + i;
                    m(row, static_cast<std::size_t>(j) * n + l) += c;
                }
    return m;
}

// Any section s1 of E(k) satisfies s1 = x^-k A^-1 s0 with s0 polynomial, so
// deg_{1/x} s1 <= k - ord(A^-1). Negative means no sections.
long section_degree_bound(const BundleOnP1& e, long k) {
    return k - min_exponent(e.inverse_transition()).value_or(0);
}

std::vector<LaurentPoly> to_s1(const RatVector& v, std::size_t n) {
    std::vector<LaurentPoly> s1(n);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx] == 0) continue;
        const auto j = static_cast<long>(idx / n);
        s1[idx % n] += LaurentPoly::monomial(v[idx], -j);
    }
    return s1;
}

// Coefficients of x^-shift * s1 in the unknown layout for degree bound `bound`.
RatVector to_coords(const std::vector<LaurentPoly>& s1, long shift, long bound) {
    const std::size_t n = s1.size();
    RatVector v(n * static_cast<std::size_t>(bound + 1));
    for (std::size_t l = 0; l < n; ++l)
        for (const auto& [e, c] : s1[l].terms()) {
            const long j = -e + shift;
            v[static_cast<std::size_t>(j) * n + l] = c;
        }
    return v;
}

long exponent_lower_guard(const BundleOnP1& e) {
    // Every index satisfies d >= ord(A), so every twist of interest is <= -ord(A).
    return -min_exponent(e.transition()).value_or(0) + 1;
}

}  // namespace

BundleOnP1::BundleOnP1(LaurentMatrix transition)
    : transition_(std::move(transition)), det_(checked_det(transition_)) {
    inverse_ = matrix_inverse(transition_);
}

BundleOnP1 BundleOnP1::line(long k) {
    return BundleOnP1(diag_monomials({k}));
}

BundleOnP1 BundleOnP1::split(const std::vector<long>& indices) {
    return BundleOnP1(diag_monomials(indices));
}

std::size_t h0_count(const BundleOnP1& e, long k) {
    const long bound = section_degree_bound(e, k);
    if (bound < 0) return 0;
    const RatMatrix m = section_system(e.transition(), k, bound);
    return m.cols() - rank(m);
}

SectionSpace h0_dim(const BundleOnP1& e, long k) {
    SectionSpace space;
    space.twist = k;
    const long bound = section_degree_bound(e, k);
    if (bound < 0) return space;
    const std::size_t n = e.rank();
    const LaurentMatrix twisted = shifted(e.transition(), k);
    for (const auto& v : nullspace(section_system(e.transition(), k, bound))) {
        Section s;
        s.s1 = to_s1(v, n);
        s.s0 = twisted.apply(s.s1);
        space.basis.push_back(std::move(s));
    }
    space.dimension = space.basis.size();
    return space;
}

SplittingType splitting_type(const BundleOnP1& e) {
    const std::size_t n = e.rank();
    const long start = min_exponent(e.inverse_transition()).value_or(0);
    const long stop = exponent_lower_guard(e);

    // delta(k) = h(k) - h(k-1) counts indices d >= -k; h(start - 1) = 0.
    SplittingType st;
    std::size_t h_prev = 0;
    std::size_t delta_prev = 0;
    for (long k = start; st.indices.size() < n; ++k) {
        if (k > stop) throw InternalSearchExhausted("section-count scan did not reach the full rank");
        const std::size_t h = h0_count(e, k);
        const std::size_t delta = h - h_prev;
        for (std::size_t i = delta_prev; i < delta; ++i) st.indices.push_back(-k);
        h_prev = h;
        delta_prev = delta;
    }
    const long sum = std::accumulate(st.indices.begin(), st.indices.end(), 0L);
    if (st.indices.size() != n || sum != e.det_unit().exponent)
        throw InternalSearchExhausted("splitting type fails the degree sum rule");
    return st;
}

Factorization birkhoff_factor(const BundleOnP1& e) {
    const std::size_t n = e.rank();
    const LaurentMatrix& a = e.transition();

    if (n == 1) {
        Factorization f;
        f.b = LaurentMatrix(1, 1);
        f.b(0, 0) = LaurentPoly(Rat(1) / e.det_unit().coeff);
        f.c = LaurentMatrix::identity(1);
        f.exponents.indices = {e.det_unit().exponent};
        return f;
    }

    // Ascend through twists. At twist k the sections coming from columns
    // chosen at k' < k are x^-j c, 0 <= j <= k - k'; every further independent
    // section is a new column of C with index -k.
    struct Chosen {
        std::vector<LaurentPoly> s1;
        long twist;
    };
    std::vector<Chosen> chosen;
    const long start = min_exponent(e.inverse_transition()).value_or(0);
    const long stop = exponent_lower_guard(e);
    for (long k = start; chosen.size() < n; ++k) {
        if (k > stop) throw InternalSearchExhausted("section search did not produce a full set of columns");
        const long bound = k - start;
        const auto kernel = nullspace(section_system(a, k, bound));
        EchelonBasis span(n * static_cast<std::size_t>(bound + 1));
        for (const auto& c : chosen)
            for (long j = 0; j <= k - c.twist; ++j) span.insert(to_coords(c.s1, j, bound));
        std::vector<Chosen> fresh;
        for (const auto& v : kernel)
            if (span.insert(v)) fresh.push_back({to_s1(v, n), k});
        for (auto& f : fresh) chosen.push_back(std::move(f));
    }
    if (chosen.size() != n) throw InternalSearchExhausted("section search selected too many columns");

    Factorization f;
    f.c = LaurentMatrix(n, n);
    std::vector<long> inverse_exponents;
    for (std::size_t j = 0; j < n; ++j) {
        f.c.set_column(j, chosen[j].s1);
        f.exponents.indices.push_back(-chosen[j].twist);
        inverse_exponents.push_back(chosen[j].twist);
    }

    // B^-1 = A C diag(x^-d) must be polynomial in x with constant determinant.
    const LaurentMatrix b_inv = a * f.c * diag_monomials(inverse_exponents);
    const auto b_det = is_laurent_unit(det(b_inv));
    if (!b_det || b_det->exponent != 0 || min_exponent(b_inv).value_or(0) < 0)
        throw InternalSearchExhausted("selected sections do not yield a polynomial left factor");
    f.b = matrix_inverse(b_inv);

    const auto report = verify_factorization(a, f);
    if (!report.valid)
        throw InternalSearchExhausted("factorization certificate failed: " + report.failed_clause + " (" +
                                      report.detail + ")");
    return f;
}

VerificationReport verify_factorization(const LaurentMatrix& a, const Factorization& f) {
    const auto fail = [](std::string clause, std::string detail) {
        return VerificationReport{false, std::move(clause), std::move(detail)};
    };
    try {
        const std::size_t n = a.rows();
        if (!a.is_square() || f.b.rows() != n || f.b.cols() != n || f.c.rows() != n || f.c.cols() != n ||
            f.exponents.indices.size() != n)
            return fail("shape", "A, B, C and the exponent list must agree in dimension");
        if (!std::is_sorted(f.exponents.indices.begin(), f.exponents.indices.end(), std::greater<>()))
            return fail("exponents descending", "exponents must be sorted in descending order");

        const auto det_b = is_laurent_unit(det(f.b));
        if (!det_b || det_b->exponent != 0) return fail("det(B) constant", "det(B) = " + det(f.b).to_string());
        const auto det_c = is_laurent_unit(det(f.c));
        if (!det_c || det_c->exponent != 0) return fail("det(C) constant", "det(C) = " + det(f.c).to_string());

        for (const auto& p : f.b.data())
            if (p.has_negative_exponents()) return fail("B polynomial in x", "entry " + p.to_string());
        for (const auto& p : f.c.data())
            if (p.has_positive_exponents()) return fail("C polynomial in 1/x", "entry " + p.to_string());

        const LaurentMatrix product = f.b * a * f.c;
        if (!(product == diag_monomials(f.exponents.indices)))
            return fail("B A C diagonal", "B A C differs from diag(x^d)");
        return {true, "", ""};
    } catch (const std::exception& ex) {
        return fail("well-formed", ex.what());
    }
}

BundleOnP1 dual(const BundleOnP1& e) {
    return BundleOnP1(e.inverse_transition().transposed());
}

BundleOnP1 twist(const BundleOnP1& e, long k) {
    return BundleOnP1(shifted(e.transition(), k));
}

BundleOnP1 det_bundle(const BundleOnP1& e) {
    LaurentMatrix d(1, 1);
    d(0, 0) = LaurentPoly::monomial(e.det_unit().coeff, e.det_unit().exponent);
    return BundleOnP1(std::move(d));
}

long degree(const BundleOnP1& e) {
    return e.det_unit().exponent;
}

std::size_t h1_dim(const BundleOnP1& e, long k) {
    // Serre duality with K = O(-2): h1(E(k)) = h0(K (x) E(k)^*).
    return h0_count(twist(dual(twist(e, k)), -2), 0);
}

bool riemann_roch_check(const BundleOnP1& e, long k) {
    const auto n = static_cast<long>(e.rank());
    const auto h0 = static_cast<long>(h0_count(e, k));
    const auto h1 = static_cast<long>(h1_dim(e, k));
    return h0 - h1 == degree(e) + n * k + n;
}

bool is_isomorphic(const BundleOnP1& e1, const BundleOnP1& e2) {
    return e1.rank() == e2.rank() && splitting_type(e1) == splitting_type(e2);
}

}  // namespace p1split
