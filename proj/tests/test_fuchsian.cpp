#include <doctest.h>

#include "p1split/errors.hpp"
#include "p1split/fuchsian.hpp"
#include "support/random_bundles.hpp"

using namespace p1split;

namespace {

const RatFunc z{Poly::x()};

RatFunc c(long num, long den = 1) { return RatFunc(make_rat(num, den)); }

RatMatrix ints(std::size_t n, std::initializer_list<long> v) {
    std::vector<Rat> d;
    for (long x : v) d.emplace_back(x);
    return RatMatrix(n, n, std::move(d));
}

RatFuncMatrix lift(const RatMatrix& m, const RatFunc& f) {
    RatFuncMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j)) * f;
    return out;
}

ScalarODE hypergeometric(const Rat& a, const Rat& b, const Rat& cc) {
    const RatFunc denom = z * (RatFunc(1) - z);
    return ScalarODE{{RatFunc(-a * b) / denom, (RatFunc(cc) - RatFunc(a + b + 1) * z) / denom}};
}

ScalarODE euler() { return ScalarODE{{c(-1) / (z * z), RatFunc(1) / z}}; }

FuchsianSystem two_point() {
    FuchsianSystem s;
    s.n = 2;
    s.points = {Rat(0), Rat(1)};
    s.residues = {ints(2, {1, 0, 0, 0}), ints(2, {-1, 0, 0, 0})};
    return s;
}

}  // namespace

TEST_CASE("scalar classification") {
    const ScalarODE first{{RatFunc(1) / (z * z), RatFunc(1) / z}};
    CHECK(classify_singularity_scalar(first, Point::at(Rat(0))).kind == SingularityKind::first_kind);
    const ScalarODE second{{RatFunc(1) / (z * z)}};
    const auto cls = classify_singularity_scalar(second, Point::at(Rat(0)));
    CHECK(cls.kind == SingularityKind::second_kind);
    CHECK(cls.rank == 1);
    const auto h = hypergeometric(make_rat(1, 2), make_rat(1, 3), make_rat(1, 5));
    for (const auto& p : {Point::at(Rat(0)), Point::at(Rat(1)), Point::infinity()})
        CHECK(classify_singularity_scalar(h, p).kind == SingularityKind::first_kind);
    CHECK(classify_singularity_scalar(h, Point::at(Rat(2))).kind == SingularityKind::ordinary);
}

TEST_CASE("system classification") {
    const auto r = ints(2, {1, 2, 3, 4});
    CHECK(classify_singularity_system(lift(r, RatFunc(1) / z), Point::at(Rat(0))).kind == SingularityKind::first_kind);
    const auto second = classify_singularity_system(lift(r, RatFunc(1) / (z * z)), Point::at(Rat(0)));
    CHECK(second.kind == SingularityKind::second_kind);
    CHECK(second.rank == 1);
    const auto inf = classify_singularity_system(lift(r, RatFunc(1)), Point::infinity());
    CHECK(inf.kind == SingularityKind::second_kind);
    CHECK(inf.rank == 1);
    CHECK(classify_singularity_system(lift(r, RatFunc(1) / z), Point::infinity()).kind == SingularityKind::first_kind);
    CHECK(classify_singularity_system(lift(r, RatFunc(1) / z), Point::at(Rat(3))).kind == SingularityKind::ordinary);
}

TEST_CASE("coordinate stability of classification") {
    testing_support::Generator g(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Rat p = g.small_rational();
        const long order = g.uniform(1, 3);
        const RatFunc pole = RatFunc(1) / (z - RatFunc(p));
        ScalarODE ode;
        for (long k = 0; k < 2; ++k) ode.coeffs.push_back(RatFunc(g.small_rational()) * pole.pow(g.uniform(0, order + 1)));
        ScalarODE moved;
        for (const auto& a : ode.coeffs) moved.coeffs.push_back(a.shifted(p));
        const auto lhs = classify_singularity_scalar(ode, Point::at(p));
        const auto rhs = classify_singularity_scalar(moved, Point::at(Rat(0)));
        CHECK(lhs.kind == rhs.kind);
        CHECK(lhs.rank == rhs.rank);

        const RatFuncMatrix a = lift(g.rat_matrix(2), pole.pow(g.uniform(0, 3)));
        RatFuncMatrix am(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) am(i, j) = a(i, j).shifted(p);
        const auto sl = classify_singularity_system(a, Point::at(p));
        const auto sr = classify_singularity_system(am, Point::at(Rat(0)));
        CHECK(sl.kind == sr.kind);
        CHECK(sl.rank == sr.rank);
    }
}

TEST_CASE("system exponents") {
    FuchsianSystem s;
    s.n = 2;
    s.points = {Rat(0)};
    s.residues = {ints(2, {1, 0, 0, 0})};
    const auto e = exponents_system(s, Point::at(Rat(0)));
    CHECK(e.charpoly == Poly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
    CHECK(e.trace == 1);
    CHECK(e.splits_over_q);

    s.residues = {ints(2, {0, 1, 0, 0})};
    const auto nil = exponents_system(s, Point::at(Rat(0)));
    CHECK(nil.charpoly == Poly::x() * Poly::x());
    CHECK(nil.trace == 0);

    CHECK(two_point().residue_at(Point::infinity()) == RatMatrix(2, 2));
    CHECK(exponents_system(two_point(), Point::infinity()).trace == 0);
    CHECK(exponents_system(two_point(), Point::at(Rat(5))).trace == 0);
}

TEST_CASE("system Fuchs relation") {
    const auto rel = fuchs_relation_system(two_point());
    CHECK(rel.holds);
    CHECK(rel.total == 0);

    auto overridden = two_point();
    overridden.infinity_override = RatMatrix::identity(2);
    const auto bad = fuchs_relation_system(overridden);
    CHECK_FALSE(bad.holds);
    CHECK(bad.total == 2);

    testing_support::Generator g(32);
    for (int trial = 0; trial < 30; ++trial) {
        FuchsianSystem s;
        s.n = static_cast<std::size_t>(g.uniform(1, 3));
        const long count = g.uniform(1, 4);
        for (long i = 0; i < count; ++i) {
            s.points.push_back(Rat(i) + make_rat(1, 3));
            s.residues.push_back(g.rat_matrix(s.n));
        }
        const auto r = fuchs_relation_system(s);
        CHECK(r.holds);
        CHECK(r.total == 0);
    }
}

TEST_CASE("indicial polynomials") {
    const auto e = indicial_polynomial(euler(), Point::at(Rat(0)));
    CHECK(e.polynomial == Poly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    CHECK(e.exponent_sum == 0);
    REQUIRE(e.rational_roots.size() == 2);
    CHECK(e.rational_roots[0].value == -1);
    CHECK(e.rational_roots[1].value == 1);

    const ScalarODE flat{{RatFunc(), RatFunc()}};
    const auto o = indicial_polynomial(flat, Point::at(Rat(0)));
    CHECK(o.polynomial == falling_factorial(2));
    CHECK(o.exponent_sum == 1);

    const auto h = indicial_polynomial(hypergeometric(Rat(2), Rat(3), make_rat(1, 2)), Point::at(Rat(0)));
    CHECK(h.exponent_sum == make_rat(1, 2));
    REQUIRE(h.rational_roots.size() == 2);
    CHECK(h.rational_roots[0].value == 0);
    CHECK(h.rational_roots[1].value == make_rat(1, 2));

    CHECK_THROWS_AS(indicial_polynomial(ScalarODE{{RatFunc(1) / (z * z)}}, Point::at(Rat(0))), NotFirstKind);
}

TEST_CASE("indicial degree and Vieta") {
    testing_support::Generator g(33);
    for (int trial = 0; trial < 25; ++trial) {
        const auto h = hypergeometric(g.nonzero_small() / Rat(g.uniform(1, 5)), g.nonzero_small() / Rat(g.uniform(1, 5)),
                                      g.small_rational());
        for (const auto& p : {Point::at(Rat(0)), Point::at(Rat(1)), Point::infinity()}) {
            const auto d = indicial_polynomial(h, p);
            CHECK(d.polynomial.degree() == 2);
            CHECK(d.polynomial.leading() == 1);
            CHECK(d.exponent_sum == -d.polynomial.coeff(1));
        }
    }
}

TEST_CASE("scalar Fuchs relation") {
    const auto h = fuchs_relation_scalar(hypergeometric(make_rat(1, 2), make_rat(1, 3), make_rat(1, 5)));
    CHECK(h.holds);
    CHECK(h.lhs == 1);
    CHECK(h.rhs == 1);
    CHECK(h.singular_points.size() == 3);

    const auto e = fuchs_relation_scalar(euler());
    CHECK(e.holds);
    CHECK(e.rhs == 0);
    CHECK(e.lhs == 0);
    CHECK(e.singular_points.size() == 2);

    CHECK_THROWS_AS(fuchs_relation_scalar(ScalarODE{{RatFunc(1) / (z * z * z), RatFunc()}}), NotFuchsian);
    CHECK_THROWS_AS(fuchs_relation_scalar(ScalarODE{{RatFunc(1), RatFunc()}}), NotFuchsian);
    CHECK_THROWS_AS(fuchs_relation_scalar(ScalarODE{{RatFunc(1) / (z * z - c(2)), RatFunc()}}), UnsupportedSingularity);
}

TEST_CASE("Frobenius series") {
    LocalSystemData scalar{RatMatrix(1, 1, {make_rat(3, 7)}), {}};
    const auto s1 = frobenius_series(scalar, 4);
    for (std::size_t k = 1; k < s1.coefficients.size(); ++k) CHECK(s1.coefficients[k] == RatMatrix(1, 1));
    CHECK(ode_residual(scalar, s1) == 5);

    LocalSystemData local{RatMatrix(2, 2, {make_rat(1, 2), Rat(0), Rat(0), Rat(0)}), {ints(2, {0, 1, 1, 0})}};
    const auto s = frobenius_series(local, 1);
    REQUIRE(s.coefficients.size() == 2);
    CHECK(s.coefficients[1](0, 1) == 2);
    CHECK(s.coefficients[1](1, 0) == make_rat(2, 3));
    CHECK(s.coefficients[1](0, 0) == 0);
    CHECK(s.coefficients[1](1, 1) == 0);

    const auto s8 = frobenius_series(local, 8);
    CHECK(ode_residual(local, s8) >= 8);
    auto corrupt = s8;
    corrupt.coefficients[1](0, 0) += 1;
    CHECK(ode_residual(local, corrupt) == 0);

    LocalSystemData resonant{ints(2, {1, 0, 0, 0}), {ints(2, {0, 1, 1, 0})}};
    CHECK_THROWS_AS(frobenius_series(resonant, 8), ResonantExponents);
}

TEST_CASE("Frobenius residual on random non-resonant data") {
    testing_support::Generator g(34);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(g.uniform(1, 3));
        LocalSystemData local{g.rat_matrix(n), {g.rat_matrix(n), g.rat_matrix(n)}};
        try {
            const auto s = frobenius_series(local, 6);
            CHECK(ode_residual(local, s) >= 6);
            ++checked;
        } catch (const ResonantExponents&) {
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("gauge transformations") {
    RatFuncMatrix zero(2, 2);
    RatFuncMatrix p(2, 2);
    p(0, 0) = z;
    p(1, 1) = RatFunc(1);
    const auto t = gauge_transform(zero, p);
    CHECK(t(0, 0) == c(-1) / z);
    CHECK(t(0, 1).is_zero());
    CHECK(t(1, 0).is_zero());
    CHECK(t(1, 1).is_zero());

    const RatFuncMatrix a = lift(ints(2, {1, 2, 0, 1}), RatFunc(1) / z);
    CHECK(gauge_transform(a, RatFuncMatrix::identity(2)) == a);
    CHECK_THROWS_AS(gauge_transform(a, RatFuncMatrix(2, 2)), NotInvertible);

    testing_support::Generator g(35);
    for (int trial = 0; trial < 15; ++trial) {
        RatFuncMatrix pp(2, 2);
        RatFuncMatrix qq(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                pp(i, j) = RatFunc(g.small_rational()) + (i == j ? z : RatFunc());
                qq(i, j) = RatFunc(g.small_rational()) * (i < j ? z * z : RatFunc(1)) + (i == j ? RatFunc(1) : RatFunc());
            }
        const auto pinv = inverse(pp);
        if (!pinv || !inverse(qq)) continue;
        CHECK(gauge_transform(gauge_transform(a, pp), *pinv) == a);
        CHECK(gauge_transform(gauge_transform(a, pp), qq) == gauge_transform(a, pp * qq));
    }
}
