// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/h0_oracle.hpp"
#include "p1split/bundle.hpp"
#include "p1split/errors.hpp"
#include "p1split/fuchsian.hpp"
#include "p1split/monodromy.hpp"
#include "support/random_bundles.hpp"

using namespace p1split;

namespace {

constexpr double kFastLimitSeconds = 1.0;
constexpr double kFactorLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << what;
        pass = pass && ok;
    }
};

std::string join(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

int failures = 0;

void run(const std::string& id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) out.require(false, "runtime " + std::to_string(secs) + " s exceeds limit");
    if (!out.pass) ++failures;
    std::printf("%s %s %s [%.3f s]%s%s\n", out.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
                out.detail.str().empty() ? "" : " -- ", out.detail.str().c_str());
    std::fflush(stdout);
}

LaurentPoly xp(long e) { return LaurentPoly::monomial(Rat(1), e); }

}  // namespace

int main() {
    run("1", "rank-4 counterexample to the Fuchsian realization", kFastLimitSeconds, [](Outcome& o) {
        const auto rep = bolibrukh_example();
        const auto r = bolibrukh_criterion(rep);
        RatMatrix prod = RatMatrix::identity(4);
        for (const auto& m : rep.matrices()) prod = prod * m;
        o.require(prod == RatMatrix::identity(4), "M1 M2 M3 != I4");
        o.require(r.product_is_identity, "product flag false");
        o.require(r.reducible, "not reducible");
        o.require(r.witness && *r.witness == std::vector<std::size_t>{0, 1}, "witness is not span{e1, e2}");
        o.require(r.profiles.size() == 3, "wrong generator count");
        const std::vector<Rat> mu{Rat(1), Rat(1), Rat(-1)};
        for (std::size_t i = 0; i < r.profiles.size() && i < 3; ++i) {
            o.require(r.profiles[i].single_block, "generator " + std::to_string(i + 1) + " not a single block");
            o.require(r.profiles[i].single_eigenvalue == mu[i], "eigenvalue of generator " + std::to_string(i + 1));
        }
        o.require(r.eigenvalue_product == Rat(-1), "eigenvalue product != -1");
        o.require(r.applies, "criterion does not apply");
    });

    run("2", "section counts of O(k) and the canonical bundle", kFastLimitSeconds, [](Outcome& o) {
        const auto trivial = BundleOnP1::line(0);
        for (long k = 0; k <= 10; ++k)
            o.require(h0_count(trivial, k) == static_cast<std::size_t>(k + 1), "h0(O(" + std::to_string(k) + "))");
        for (long k = -5; k <= -1; ++k) o.require(h0_count(trivial, k) == 0, "h0(O(" + std::to_string(k) + "))");
        o.require(h0_count(twist(BundleOnP1::line(-2), 2), 0) == 1, "h0(K(2)) != 1");
    });

    run("3", "200 planted factorizations verify and recover the indices", kFactorLimitSeconds, [](Outcome& o) {
        testing_support::Generator g(kSeed);
        for (int t = 0; t < 200; ++t) {
            const auto n = static_cast<std::size_t>(g.uniform(1, 4));
            const auto p = g.planted_within(n, -3, 3);
            const auto f = birkhoff_factor(BundleOnP1(p.a));
            const auto rep = verify_factorization(p.a, f);
            o.require(rep.valid, "instance " + std::to_string(t) + ": " + rep.failed_clause);
            o.require(f.exponents.indices == p.indices,
                      "instance " + std::to_string(t) + ": got " + join(f.exponents.indices) + ", planted " + join(p.indices));
        }
    });

    run("4", "splitting type is invariant under U A V", 0, [](Outcome& o) {
        testing_support::Generator g(kSeed + 1);
        for (int t = 0; t < 100; ++t) {
            const auto n = static_cast<std::size_t>(g.uniform(1, 4));
            const auto p = g.planted_within(n, -3, 3);
            const auto u = g.unimodular(n, 0, 3);
            const auto v = g.unimodular(n, -3, 0);
            o.require(splitting_type(BundleOnP1(u * p.a * v)) == splitting_type(BundleOnP1(p.a)),
                      "instance " + std::to_string(t));
        }
    });

    run("5", "Riemann-Roch h0 - h1 = deg + n on 100 bundles, k in [-4, 4]", 0, [](Outcome& o) {
        testing_support::Generator g(kSeed + 2);
        for (int t = 0; t < 100; ++t) {
            const auto n = static_cast<std::size_t>(g.uniform(1, 4));
            const BundleOnP1 e(g.planted_within(n, -3, 3).a);
            for (long k = -4; k <= 4; ++k) {
                const auto lhs = static_cast<long>(h0_count(e, k)) - static_cast<long>(h1_dim(e, k));
                const long rhs = degree(e) + static_cast<long>(n) * k + static_cast<long>(n);
                o.require(lhs == rhs, "instance " + std::to_string(t) + ", k = " + std::to_string(k));
            }
        }
    });

    run("6", "Fuchs relations for systems and the hypergeometric family", 0, [](Outcome& o) {
        testing_support::Generator g(kSeed + 3);
        for (int t = 0; t < 100; ++t) {
            FuchsianSystem s;
            s.n = static_cast<std::size_t>(g.uniform(1, 4));
            const long count = g.uniform(1, 5);
            for (long i = 0; i < count; ++i) {
                s.points.push_back(Rat(2 * i) + g.small_rational() / Rat(7));
                s.residues.push_back(g.rat_matrix(s.n));
            }
            Rat traces = 0;
            for (const auto& r : s.residues) traces += trace(r);
            traces += trace(s.residue_at(Point::infinity()));
            const auto rel = fuchs_relation_system(s);
            o.require(traces == 0 && rel.holds && rel.total == 0, "system instance " + std::to_string(t));
        }
        const RatFunc z{Poly::x()};
        for (int t = 0; t < 25; ++t) {
            const Rat a = g.nonzero_small() / Rat(g.uniform(1, 6));
            const Rat b = g.nonzero_small() / Rat(g.uniform(1, 6));
            const Rat c = g.small_rational();
            const RatFunc denom = z * (RatFunc(1) - z);
            const ScalarODE ode{{RatFunc(-a * b) / denom, (RatFunc(c) - RatFunc(a + b + 1) * z) / denom}};
            const auto rel = fuchs_relation_scalar(ode);
            const std::string tag = "hypergeometric a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
            o.require(rel.singular_points.size() == 3, tag + ": expected 3 singular points");
            o.require(rel.lhs == 1 && rel.rhs == 1 && rel.holds, tag);
        }
    });

    run("7", "Frobenius residual certificate and resonance detection", 0, [](Outcome& o) {
        testing_support::Generator g(kSeed + 4);
        const std::size_t truncation = 8;
        int certified = 0;
        while (certified < 50) {
            const auto n = static_cast<std::size_t>(g.uniform(1, 3));
            LocalSystemData local{g.rat_matrix(n), {g.rat_matrix(n), g.rat_matrix(n), g.rat_matrix(n)}};
            const Poly cp = charpoly(local.residue);
            bool resonant = false;
            for (long k = 1; k <= static_cast<long>(truncation); ++k)
                if (resultant(cp, cp.shifted(Rat(-k))) == 0) resonant = true;
            if (resonant) continue;
            const auto s = frobenius_series(local, truncation);
            o.require(ode_residual(local, s) >= truncation, "instance " + std::to_string(certified));
            ++certified;
        }
        for (int t = 0; t < 10; ++t) {
            const auto n = static_cast<std::size_t>(g.uniform(2, 3));
            RatMatrix d(n, n);
            const Rat lambda = g.small_rational();
            for (std::size_t i = 0; i < n; ++i) d(i, i) = lambda + Rat(i == 1 ? 1 : 0);
            const auto s = g.invertible_rat_matrix(n);
            LocalSystemData local{*inverse(s) * d * s, {g.rat_matrix(n)}};
            bool raised = false;
            try {
                frobenius_series(local, truncation);
            } catch (const ResonantExponents&) {
                raised = true;
            }
            o.require(raised, "planted resonance " + std::to_string(t) + " not detected");
        }
    });

    run("8", "worked splitting values confirmed by the h0-scan oracle", 0, [](Outcome& o) {
        const LaurentMatrix ext(2, 2, {xp(1), LaurentPoly(1), LaurentPoly(), xp(-1)});
        const LaurentMatrix obs(2, 2, {xp(-1), xp(-1), LaurentPoly(), xp(1)});
        const auto ext_oracle = oracle::splitting(ext);
        const auto ext_lib = splitting_type(BundleOnP1(ext)).indices;
        o.require(ext_oracle == std::vector<long>{1, -1} && ext_lib == ext_oracle,
                  "[[x,1],[0,1/x]]: oracle " + join(ext_oracle) + ", library " + join(ext_lib) + ", expected (1, -1); ");
        const auto obs_oracle = oracle::splitting(obs);
        const auto obs_lib = splitting_type(BundleOnP1(obs)).indices;
        o.require(obs_oracle == std::vector<long>{0, 0} && obs_lib == obs_oracle,
                  "[[1/x,1/x],[0,x]]: expected (0, 0), oracle " + join(obs_oracle) + ", library " + join(obs_lib) +
                      " (s1 = (-1, 1) is a section of E(-1), so h0(E(-1)) = " +
                      std::to_string(oracle::h0(obs, -1)) + " > 0)");
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
