#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p1split/linalg.hpp"
#include "p1split/poly.hpp"
#include "p1split/ratfunc.hpp"

namespace p1split {

// A point of the projective line with rational finite part.
struct Point {
    std::optional<Rat> finite;  // empty means infinity

    static Point at(const Rat& p) { return Point{p}; }
    static Point infinity() { return Point{std::nullopt}; }
    bool is_infinity() const { return !finite.has_value(); }
    std::string to_string() const;

    friend bool operator==(const Point& a, const Point& b) { return a.finite == b.finite; }
};

// w^(n) + a_{n-1} w^(n-1) + ... + a_0 w = 0, stored as coeffs[k] = a_k.
struct ScalarODE {
    std::vector<RatFunc> coeffs;

    std::size_t order() const { return coeffs.size(); }
};

enum class SingularityKind { ordinary, first_kind, second_kind };

std::string to_string(SingularityKind kind);

struct SingularityClass {
    SingularityKind kind = SingularityKind::ordinary;
    // Highest pole order among the b's (scalar) or in z A (system); 0 unless second kind.
    long rank = 0;
};

// The same equation written in a local coordinate t vanishing at p
// (t = z - p, or t = 1/z at infinity).
ScalarODE localize(const ScalarODE& ode, const Point& p);
RatFuncMatrix localize(const RatFuncMatrix& a, const Point& p);

SingularityClass classify_singularity_scalar(const ScalarODE& ode, const Point& p);
SingularityClass classify_singularity_system(const RatFuncMatrix& a, const Point& p);

// w' = (sum_p R_p / (z - p)) w. The residue at infinity is -sum R_p unless an
// externally supplied value overrides it.
struct FuchsianSystem {
    std::size_t n = 0;
    std::vector<Rat> points;
    std::vector<RatMatrix> residues;
    std::optional<RatMatrix> infinity_override;

    // Throws DimensionMismatch / DomainError on inconsistent data.
    void validate() const;
    RatMatrix residue_at(const Point& p) const;
    RatFuncMatrix system_matrix() const;
};

struct ExponentData {
    Poly charpoly;
    Rat trace;
    std::vector<RationalRoot> rational_roots;
    bool splits_over_q = false;
};

ExponentData exponents_system(const FuchsianSystem& sys, const Point& p);

struct FuchsRelation {
    bool holds = false;
    Rat total;
};

// Sum of the traces of all residues, infinity included.
FuchsRelation fuchs_relation_system(const FuchsianSystem& sys);

struct IndicialData {
    Point point;
    Poly polynomial;  // in rho, monic of degree n
    Rat exponent_sum;
    std::vector<RationalRoot> rational_roots;
};

// Throws NotFirstKind when p is a second-kind singularity.
IndicialData indicial_polynomial(const ScalarODE& ode, const Point& p);

struct ScalarFuchsRelation {
    bool holds = false;
    Rat lhs;
    Rat rhs;
    std::vector<Point> singular_points;
    std::vector<IndicialData> local;
};

// Throws NotFuchsian for an irregular point and UnsupportedSingularity when a
// finite singular point is irrational.
ScalarFuchsRelation fuchs_relation_scalar(const ScalarODE& ode);

// Finite singular points, i.e. poles of the coefficients; rational ones only.
std::vector<Rat> rational_singular_points(const ScalarODE& ode);

// w' = (R / z + sum_m R_m z^m) w, truncated to the given tail.
struct LocalSystemData {
    RatMatrix residue;
    std::vector<RatMatrix> tail;
};

// W = S(z) z^R with S = sum_k S_k z^k, S_0 = I.
struct FrobeniusSeries {
    RatMatrix residue;
    std::vector<RatMatrix> coefficients;  // S_0 .. S_N

    std::size_t truncation() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

inline constexpr std::size_t kDefaultTruncation = 8;

// Throws ResonantExponents when two eigenvalues of R differ by an integer in 1..N.
FrobeniusSeries frobenius_series(const LocalSystemData& local, std::size_t truncation = kDefaultTruncation);

// Order in z through which W' - A W vanishes; truncation + 1 when it vanishes identically.
std::size_t ode_residual(const LocalSystemData& local, const FrobeniusSeries& series);

// P^-1 A P - P^-1 P'. Throws NotInvertible.
RatFuncMatrix gauge_transform(const RatFuncMatrix& a, const RatFuncMatrix& p);

}  // namespace p1split
