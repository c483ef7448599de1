#include "p1split/fuchsian.hpp"

#include <algorithm>
#include <set>

#include "p1split/errors.hpp"

namespace p1split {

std::string Point::to_string() const {
    return finite ? p1split::to_string(*finite) : "infinity";
}

std::string to_string(SingularityKind kind) {
    switch (kind) {
        case SingularityKind::ordinary: return "ordinary";
        case SingularityKind::first_kind: return "first_kind";
        case SingularityKind::second_kind: return "second_kind";
    }
    return "unknown";
}

namespace {

RatFunc t_power(long k) {
    return RatFunc(Poly::monomial(Rat(1), static_cast<std::size_t>(k)));
}

// Operator identity d/dz = -t^2 d/dt for t = 1/z: returns c with
// (d/dz)^k = sum_j c[k][j] (d/dt)^j for k = 0..n.
std::vector<std::vector<RatFunc>> derivative_powers_at_infinity(std::size_t n) {
    std::vector<std::vector<RatFunc>> c(n + 1, std::vector<RatFunc>(n + 1));
    c[0][0] = RatFunc(1);
    const RatFunc minus_t2 = -t_power(2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            if (c[k][j].is_zero()) continue;
            c[k + 1][j] += minus_t2 * c[k][j].derivative();
            c[k + 1][j + 1] += minus_t2 * c[k][j];
        }
    return c;
}

long pole_order(const RatFunc& f) {
    const auto ord = f.order_at_zero();
    return ord ? -*ord : 0;
}

}  // namespace

ScalarODE localize(const ScalarODE& ode, const Point& p) {
    ScalarODE out;
    const std::size_t n = ode.order();
    if (!p.is_infinity()) {
        for (const auto& a : ode.coeffs) out.coeffs.push_back(a.shifted(*p.finite));
        return out;
    }
    const auto c = derivative_powers_at_infinity(n);
    std::vector<RatFunc> a(n + 1);
    for (std::size_t k = 0; k < n; ++k) a[k] = ode.coeffs[k].inverted_argument();
    a[n] = RatFunc(1);
    const RatFunc& lead = c[n][n];
    for (std::size_t j = 0; j < n; ++j) {
        RatFunc acc;
        for (std::size_t k = j; k <= n; ++k)
            if (!a[k].is_zero() && !c[k][j].is_zero()) acc += a[k] * c[k][j];
        out.coeffs.push_back(acc / lead);
    }
    return out;
}

RatFuncMatrix localize(const RatFuncMatrix& a, const Point& p) {
    RatFuncMatrix out(a.rows(), a.cols());
    // At infinity A(z) dz = -A(1/t) / t^2 dt.
    const RatFunc factor = p.is_infinity() ? -t_power(2).pow(-1) : RatFunc(1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = p.is_infinity() ? a(i, j).inverted_argument() * factor : a(i, j).shifted(*p.finite);
    return out;
}

SingularityClass classify_singularity_scalar(const ScalarODE& ode, const Point& p) {
    const ScalarODE local = localize(ode, p);
    const std::size_t n = local.order();
    bool analytic = true;
    long b_pole = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = local.coeffs[j];
        if (a.is_zero()) continue;
        const long ord = *a.order_at_zero();
        if (ord < 0) analytic = false;
        // b_j = t^(n-j) a_j
        b_pole = std::max(b_pole, -(ord + static_cast<long>(n - j)));
    }
    if (analytic) return {SingularityKind::ordinary, 0};
    if (b_pole <= 0) return {SingularityKind::first_kind, 0};
    return {SingularityKind::second_kind, b_pole};
}

SingularityClass classify_singularity_system(const RatFuncMatrix& a, const Point& p) {
    const RatFuncMatrix local = localize(a, p);
    long order = 0;
    for (const auto& f : local.data()) order = std::max(order, pole_order(f));
    if (order == 0) return {SingularityKind::ordinary, 0};
    if (order == 1) return {SingularityKind::first_kind, 0};
    return {SingularityKind::second_kind, order - 1};
}

void FuchsianSystem::validate() const {
    if (n == 0) throw DimensionMismatch("system dimension must be positive");
    if (points.size() != residues.size()) throw DimensionMismatch("one residue matrix per marked point required");
    for (const auto& r : residues)
        if (r.rows() != n || r.cols() != n) throw DimensionMismatch("residue matrix has the wrong shape");
    if (infinity_override && (infinity_override->rows() != n || infinity_override->cols() != n))
        throw DimensionMismatch("residue at infinity has the wrong shape");
    const std::set<Rat> distinct(points.begin(), points.end());
    if (distinct.size() != points.size()) throw DomainError("marked points must be distinct");
}

RatMatrix FuchsianSystem::residue_at(const Point& p) const {
    if (p.is_infinity()) {
        if (infinity_override) return *infinity_override;
        RatMatrix sum(n, n);
        for (const auto& r : residues) sum += r;
        return -sum;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == *p.finite) return residues[i];
    return RatMatrix(n, n);
}

RatFuncMatrix FuchsianSystem::system_matrix() const {
    RatFuncMatrix a(n, n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RatFunc pole(Poly(1), Poly(std::vector<Rat>{-points[i], Rat(1)}));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (residues[i](r, c) != 0) a(r, c) += pole * RatFunc(residues[i](r, c));
    }
    return a;
}

ExponentData exponents_system(const FuchsianSystem& sys, const Point& p) {
    sys.validate();
    const RatMatrix r = sys.residue_at(p);
    ExponentData out;
    out.charpoly = charpoly(r);
    out.trace = trace(r);
    out.rational_roots = rational_roots(out.charpoly);
    std::size_t counted = 0;
    for (const auto& root : out.rational_roots) counted += root.multiplicity;
    out.splits_over_q = counted == sys.n;
    return out;
}

FuchsRelation fuchs_relation_system(const FuchsianSystem& sys) {
    sys.validate();
    Rat total = 0;
    for (const auto& r : sys.residues) total += trace(r);
    total += trace(sys.residue_at(Point::infinity()));
    return {total == 0, total};
}

IndicialData indicial_polynomial(const ScalarODE& ode, const Point& p) {
    const std::size_t n = ode.order();
    if (n == 0) throw DomainError("equation order must be positive");
    if (classify_singularity_scalar(ode, p).kind == SingularityKind::second_kind)
        throw NotFirstKind("point " + p.to_string() + " is not a singularity of the first kind");
    const ScalarODE local = localize(ode, p);

    // sum_k b_k(0) rho (rho - 1) ... (rho - k + 1), b_n = 1
    Poly poly = falling_factorial(n);
    std::vector<Rat> b0(n);
    for (std::size_t k = 0; k < n; ++k) {
        b0[k] = (local.coeffs[k] * t_power(static_cast<long>(n - k))).eval(0);
        poly += Poly(b0[k]) * falling_factorial(k);
    }
    IndicialData out;
    out.point = p;
    out.polynomial = poly;
    const auto nl = static_cast<long>(n);
    out.exponent_sum = -b0[n - 1] + make_rat(nl * (nl - 1), 2);
    out.rational_roots = rational_roots(poly);
    return out;
}

namespace {

Poly singular_locus(const ScalarODE& ode) {
    Poly prod(1);
    for (const auto& a : ode.coeffs) prod *= a.den();
    return squarefree_part(prod);
}

}  // namespace

std::vector<Rat> rational_singular_points(const ScalarODE& ode) {
    std::vector<Rat> out;
    for (const auto& r : rational_roots(singular_locus(ode))) out.push_back(r.value);
    return out;
}

ScalarFuchsRelation fuchs_relation_scalar(const ScalarODE& ode) {
    const std::size_t n = ode.order();
    if (n == 0) throw DomainError("equation order must be positive");

    // First kind at every finite point iff den(a_{n-k}) divides S^k, S the
    // squarefree singular locus.
    const Poly locus = singular_locus(ode);
    for (std::size_t j = 0; j < n; ++j) {
        const Poly bound = locus.pow(static_cast<unsigned>(n - j));
        if (!(bound % ode.coeffs[j].den()).is_zero())
            throw NotFuchsian("coefficient a_" + std::to_string(j) + " has a pole of order above " +
                              std::to_string(n - j));
    }
    const auto at_infinity = classify_singularity_scalar(ode, Point::infinity());
    if (at_infinity.kind == SingularityKind::second_kind) throw NotFuchsian("infinity is an irregular singular point");

    const auto roots = rational_roots(locus);
    if (static_cast<long>(roots.size()) != std::max(0L, locus.degree()))
        throw UnsupportedSingularity("singular locus " + locus.to_string() + " has irrational points");

    ScalarFuchsRelation out;
    for (const auto& r : roots) out.singular_points.push_back(Point::at(r.value));
    if (at_infinity.kind != SingularityKind::ordinary) out.singular_points.push_back(Point::infinity());

    out.lhs = 0;
    for (const auto& p : out.singular_points) {
        out.local.push_back(indicial_polynomial(ode, p));
        out.lhs += out.local.back().exponent_sum;
    }
    const auto nl = static_cast<long>(n);
    const auto count = static_cast<long>(out.singular_points.size());
    out.rhs = make_rat(nl * (nl - 1), 2) * (count - 2);
    out.holds = out.lhs == out.rhs;
    return out;
}

namespace {

// Residual coefficient k S_k + S_k R - R S_k - sum_m R_m S_{k-1-m}, with S_j = 0 past the series.
RatMatrix recursion_residual(const LocalSystemData& local, const std::vector<RatMatrix>& s, std::size_t k) {
    const std::size_t n = local.residue.rows();
    const RatMatrix zero(n, n);
    const RatMatrix& sk = k < s.size() ? s[k] : zero;
    RatMatrix r = sk.scaled(Rat(static_cast<long>(k))) + sk * local.residue - local.residue * sk;
    for (std::size_t m = 0; m < local.tail.size() && m + 1 <= k; ++m) {
        const std::size_t j = k - 1 - m;
        if (j < s.size()) r -= local.tail[m] * s[j];
    }
    return r;
}

void check_local(const LocalSystemData& local) {
    const std::size_t n = local.residue.rows();
    if (n == 0 || !local.residue.is_square()) throw DimensionMismatch("residue must be a nonempty square matrix");
    for (const auto& t : local.tail)
        if (t.rows() != n || t.cols() != n) throw DimensionMismatch("tail matrix has the wrong shape");
}

}  // namespace

FrobeniusSeries frobenius_series(const LocalSystemData& local, std::size_t truncation) {
    check_local(local);
    const std::size_t n = local.residue.rows();
    const RatMatrix& r = local.residue;

    const Poly cp = charpoly(r);
    for (std::size_t k = 1; k <= truncation; ++k)
        if (resultant(cp, cp.shifted(Rat(-static_cast<long>(k)))) == 0)
            throw ResonantExponents("two exponents differ by " + std::to_string(k));

    FrobeniusSeries out;
    out.residue = r;
    out.coefficients.push_back(RatMatrix::identity(n));
    const std::size_t nn = n * n;
    for (std::size_t k = 1; k <= truncation; ++k) {
        RatMatrix rhs(n, n);
        for (std::size_t m = 0; m < local.tail.size() && m + 1 <= k; ++m) rhs += local.tail[m] * out.coefficients[k - 1 - m];

        // (k S + S R - R S)_{ij} as a linear map on the row-major entries of S.
        RatMatrix op(nn, nn);
        RatVector b(nn);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = i * n + j;
                b[row] = rhs(i, j);
                op(row, row) += static_cast<long>(k);
                for (std::size_t m = 0; m < n; ++m) {
                    op(row, i * n + m) += r(m, j);
                    op(row, m * n + j) -= r(i, m);
                }
            }
        const auto sol = solve(op, b);
        if (!sol) throw ResonantExponents("singular recursion at order " + std::to_string(k));
        out.coefficients.emplace_back(n, n, *sol);
    }
    return out;
}

std::size_t ode_residual(const LocalSystemData& local, const FrobeniusSeries& series) {
    check_local(local);
    const std::size_t truncation = series.truncation();
    if (series.coefficients.empty() || !(series.coefficients[0] == RatMatrix::identity(local.residue.rows())))
        return 0;
    // Past truncation + tail length every residual coefficient vanishes trivially.
    const std::size_t last = truncation + local.tail.size();
    for (std::size_t k = 1; k <= last; ++k)
        if (!recursion_residual(local, series.coefficients, k).is_zero()) return k - 1;
    return truncation + 1;
}

RatFuncMatrix gauge_transform(const RatFuncMatrix& a, const RatFuncMatrix& p) {
    if (!a.is_square() || !p.is_square() || a.rows() != p.rows())
        throw DimensionMismatch("gauge transform needs square matrices of equal size");
    const auto p_inv = inverse(p);
    if (!p_inv) throw NotInvertible("gauge matrix is singular over Q(z)");
    return *p_inv * a * p - *p_inv * derivative(p);
}

}  // namespace p1split
