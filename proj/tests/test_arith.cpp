#include <doctest.h>

#include "p1split/errors.hpp"
#include "p1split/laurent.hpp"
#include "p1split/linalg.hpp"
#include "p1split/poly.hpp"
#include "p1split/ratfunc.hpp"
#include "support/random_bundles.hpp"

using namespace p1split;

namespace {

LaurentPoly xp(long e, long c = 1) { return LaurentPoly::monomial(Rat(c), e); }

RatMatrix ints(std::size_t r, std::size_t c, std::initializer_list<long> v) {
    std::vector<Rat> d;
    for (long x : v) d.emplace_back(x);
    return RatMatrix(r, c, std::move(d));
}

LaurentMatrix lm2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
    return LaurentMatrix(2, 2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(to_string(make_rat(6, -4)) == "-3/2");
    CHECK(to_string(make_rat(4, 2)) == "2");
    CHECK(parse_rat("-7/21") == make_rat(-1, 3));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("laurent multiplication") {
    CHECK((xp(1) + xp(-1)) * xp(1) == xp(2) + LaurentPoly(1));
    CHECK((xp(1) + xp(-1)) * LaurentPoly() == LaurentPoly());
    CHECK((xp(-1) + LaurentPoly(2)) * (xp(1) - LaurentPoly(1)) == xp(1, 2) - LaurentPoly(1) - xp(-1));
    CHECK(laurent_mul(xp(3), xp(-3)) == LaurentPoly(1));
}

TEST_CASE("laurent text form") {
    CHECK((xp(-1, -1) + LaurentPoly(2) + xp(2) * make_rat(3, 2)).to_string() == "-x^-1 + 2 + 3/2*x^2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(xp(1).to_string() == "x");
}

TEST_CASE("laurent units") {
    const auto u = is_laurent_unit(xp(2, 3));
    REQUIRE(u);
    CHECK(u->coeff == 3);
    CHECK(u->exponent == 2);
    CHECK_FALSE(is_laurent_unit(xp(1) + LaurentPoly(1)));
    const auto v = is_laurent_unit(LaurentPoly::monomial(make_rat(-1, 2), -5));
    REQUIRE(v);
    CHECK(v->coeff == make_rat(-1, 2));
    CHECK(v->exponent == -5);
    CHECK_FALSE(is_laurent_unit(LaurentPoly()));
}

TEST_CASE("laurent determinants") {
    CHECK(det(lm2(xp(1), 1, 0, xp(-1))) == LaurentPoly(1));
    CHECK(det(LaurentMatrix::identity(4)) == LaurentPoly(1));
    CHECK(det(lm2(xp(1), 1, 1, xp(-1))) == LaurentPoly());
}

TEST_CASE("laurent matrix inverse") {
    CHECK(matrix_inverse(diag_monomials({1, -1})) == diag_monomials({-1, 1}));
    const auto inv = matrix_inverse(lm2(xp(1), 1, 0, xp(-1)));
    CHECK(inv == lm2(xp(-1), -1, 0, xp(1)));
    CHECK_THROWS_AS(matrix_inverse(lm2(1, 1, 1, 1)), NotInvertibleOverLaurentRing);
    CHECK_THROWS_AS(matrix_inverse(lm2(xp(1) + LaurentPoly(1), 0, 0, 1)), NotInvertibleOverLaurentRing);
}

TEST_CASE("laurent ring axioms on random triples") {
    testing_support::Generator g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = g.laurent(-3, 3, 4);
        const auto b = g.laurent(-3, 3, 4);
        const auto c = g.laurent(-3, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == LaurentPoly());
    }
}

TEST_CASE("det is multiplicative") {
    testing_support::Generator g(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 2 : 3;
        const auto a = g.laurent_matrix(n, -3, 3);
        const auto b = g.laurent_matrix(n, -3, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("inverse round trip") {
    testing_support::Generator g(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const auto a = g.planted(n).a;
        const auto inv = matrix_inverse(a);
        CHECK(a * inv == LaurentMatrix::identity(n));
        CHECK(inv * a == LaurentMatrix::identity(n));
    }
}

TEST_CASE("nullspace examples") {
    const auto k1 = nullspace(ints(1, 2, {1, 1}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == RatVector{Rat(-1), Rat(1)});
    CHECK(nullspace(RatMatrix::identity(3)).empty());
    const auto k2 = nullspace(ints(2, 3, {1, 2, 3, 2, 4, 6}));
    CHECK(k2.size() == 2);
    CHECK(rank(ints(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
}

TEST_CASE("nullspace property") {
    testing_support::Generator g(14);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = static_cast<std::size_t>(g.uniform(1, 5));
        const auto c = static_cast<std::size_t>(g.uniform(1, 6));
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = g.uniform(0, 2) == 0 ? Rat(0) : g.small_rational();
        const auto basis = nullspace(m);
        CHECK(basis.size() + rank(m) == c);
        for (const auto& v : basis) {
            const auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x == 0);
        }
    }
}

TEST_CASE("rref is reduced") {
    const auto e = rref(ints(3, 3, {0, 2, 4, 1, 1, 1, 2, 4, 6}));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == ints(2, 3, {1, 0, -1, 0, 1, 2}));
}

TEST_CASE("negative pivots keep fractions canonical") {
    const auto m = ints(2, 2, {-3, 1, 6, -4});
    const auto e = rref(m);
    CHECK(e.reduced == RatMatrix::identity(2));
    CHECK(det(m) == 6);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == RatMatrix::identity(2));
}

TEST_CASE("charpoly and solve") {
    const auto m = ints(2, 2, {2, 1, 0, 3});
    CHECK(charpoly(m) == Poly(std::vector<Rat>{Rat(6), Rat(-5), Rat(1)}));
    const auto x = solve(m, {Rat(3), Rat(3)});
    REQUIRE(x);
    CHECK(*x == RatVector{Rat(1), Rat(1)});
    CHECK_FALSE(solve(ints(2, 2, {1, 1, 1, 1}), {Rat(1), Rat(0)}));
}

TEST_CASE("echelon basis") {
    EchelonBasis b(3);
    CHECK(b.insert({Rat(1), Rat(2), Rat(3)}));
    CHECK_FALSE(b.insert({Rat(2), Rat(4), Rat(6)}));
    CHECK(b.insert({Rat(0), Rat(1), Rat(0)}));
    CHECK(b.contains({Rat(1), Rat(0), Rat(3)}));
    CHECK_FALSE(b.contains({Rat(0), Rat(0), Rat(1)}));
    CHECK(b.size() == 2);
}

TEST_CASE("polynomials") {
    const Poly x = Poly::x();
    const Poly p = (x - Poly(1)) * (x - Poly(1)) * (x + Poly(2));
    CHECK(p.degree() == 3);
    CHECK(gcd(p, p.derivative()) == x - Poly(1));
    CHECK(squarefree_part(p) == (x - Poly(1)) * (x + Poly(2)));
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == -2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].value == 1);
    CHECK(roots[1].multiplicity == 2);
    CHECK(rational_roots(x * x - Poly(2)).empty());
    CHECK(resultant(x - Poly(1), x - Poly(1)) == 0);
    CHECK(resultant(x - Poly(1), x - Poly(3)) != 0);
    CHECK(p.shifted(Rat(1)).eval(Rat(0)) == p.eval(Rat(1)));
    CHECK(falling_factorial(3) == x * (x - Poly(1)) * (x - Poly(2)));
    const auto [q, r] = divmod(p, x * x + Poly(1));
    CHECK(q * (x * x + Poly(1)) + r == p);
    CHECK(r.degree() < 2);
    CHECK((Poly(std::vector<Rat>{Rat(1), Rat(-1), make_rat(3, 2)})).to_string() == "3/2*x^2 - x + 1");
}

TEST_CASE("rational functions") {
    const RatFunc x(Poly::x());
    const RatFunc f = (x * x - RatFunc(1)) / (x - RatFunc(1));
    CHECK(f == x + RatFunc(1));
    CHECK(f.den() == Poly(1));
    const RatFunc g = RatFunc(1) / (x * x);
    CHECK(g.order_at_zero() == -2);
    CHECK(g.order_at_infinity() == 2);
    CHECK(g.inverted_argument() == x * x);
    CHECK(g.derivative() == RatFunc(-2) / (x * x * x));
    CHECK(g.to_laurent() == LaurentPoly::monomial(Rat(1), -2));
    CHECK(RatFunc::from_laurent(xp(-1) + xp(2)) == RatFunc(1) / x + x * x);
    CHECK(g.pow(-1) == x * x);
    CHECK_THROWS_AS(g.eval(Rat(0)), DomainError);
    CHECK_THROWS_AS(RatFunc(Poly(1), Poly()), DomainError);
}
