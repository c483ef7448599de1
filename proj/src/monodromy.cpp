#include "p1split/monodromy.hpp"

#include <cstdint>
#include <deque>

#include "p1split/errors.hpp"

namespace p1split {

MonodromyRep::MonodromyRep(std::vector<RatMatrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw DimensionMismatch("a representation needs at least one matrix");
    n_ = matrices_.front().rows();
    if (n_ == 0) throw DimensionMismatch("matrices must be nonempty");
    for (const auto& m : matrices_) {
        if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("all monodromy matrices must be n x n");
        if (det(m) == 0) throw NotInvertible("monodromy matrix is singular");
    }
}

MonodromyRep MonodromyRep::conjugated(const RatMatrix& s) const {
    const auto s_inv = inverse(s);
    if (!s_inv) throw NotInvertible("conjugating matrix is singular");
    std::vector<RatMatrix> out;
    out.reserve(matrices_.size());
    for (const auto& m : matrices_) out.push_back(*s_inv * m * s);
    return MonodromyRep(std::move(out));
}

RatMatrix loop_image(const MonodromyRep& rep, const std::vector<std::size_t>& word) {
    RatMatrix out = RatMatrix::identity(rep.dimension());
    for (const auto idx : word) {
        if (idx >= rep.matrices().size()) throw DimensionMismatch("loop index out of range");
        out = rep.matrices()[idx] * out;
    }
    return out;
}

bool check_product_identity(const MonodromyRep& rep) {
    RatMatrix prod = RatMatrix::identity(rep.dimension());
    for (const auto& m : rep.matrices()) prod = prod * m;
    return prod == RatMatrix::identity(rep.dimension());
}

std::size_t word_span_dimension(const MonodromyRep& rep) {
    const std::size_t n = rep.dimension();
    EchelonBasis span(n * n);
    std::deque<RatMatrix> frontier;
    const RatMatrix id = RatMatrix::identity(n);
    span.insert(id.data());
    frontier.push_back(id);
    while (!frontier.empty() && span.size() < n * n) {
        const RatMatrix w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : rep.matrices()) {
            RatMatrix next = g * w;
            if (span.insert(next.data())) frontier.push_back(std::move(next));
        }
    }
    return span.size();
}

bool is_irreducible(const MonodromyRep& rep) {
    const std::size_t n = rep.dimension();
    return word_span_dimension(rep) == n * n;
}

std::optional<std::vector<std::size_t>> invariant_coordinate_subspace(const MonodromyRep& rep) {
    const std::size_t n = rep.dimension();
    if (n < 2 || n > 16) return std::nullopt;
    std::optional<std::vector<std::size_t>> best;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t s = 1; s < full; ++s) {
        // Invariant iff no generator maps e_j (j in S) outside S.
        bool invariant = true;
        for (const auto& m : rep.matrices()) {
            for (std::size_t j = 0; j < n && invariant; ++j) {
                if ((s >> j & 1U) == 0) continue;
                for (std::size_t i = 0; i < n; ++i)
                    if ((s >> i & 1U) == 0 && m(i, j) != 0) {
                        invariant = false;
                        break;
                    }
            }
            if (!invariant) break;
        }
        if (!invariant) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i & 1U) != 0) idx.push_back(i);
        if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < *best)) best = idx;
    }
    return best;
}

JordanProfile jordan_profile(const RatMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw DimensionMismatch("Jordan profile needs a square matrix");
    const std::size_t n = m.rows();
    const Rat mu = trace(m) / Rat(static_cast<long>(n));
    JordanProfile out;
    const Poly target = Poly(std::vector<Rat>{-mu, Rat(1)}).pow(static_cast<unsigned>(n));
    if (!(charpoly(m) == target)) return out;
    out.single_eigenvalue = mu;
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mu;
    out.single_block = rank(shifted) == n - 1;
    return out;
}

CriterionReport bolibrukh_criterion(const MonodromyRep& rep) {
    CriterionReport out;
    out.dimension_at_least_four = rep.dimension() >= 4;
    out.product_is_identity = check_product_identity(rep);
    out.reducible = !is_irreducible(rep);
    if (out.reducible) out.witness = invariant_coordinate_subspace(rep);

    out.all_single_block = true;
    Rat product = 1;
    bool all_single_eigenvalue = true;
    for (const auto& m : rep.matrices()) {
        out.profiles.push_back(jordan_profile(m));
        const auto& p = out.profiles.back();
        out.all_single_block = out.all_single_block && p.single_block;
        if (p.single_eigenvalue)
            product *= *p.single_eigenvalue;
        else
            all_single_eigenvalue = false;
    }
    if (all_single_eigenvalue) out.eigenvalue_product = product;

    const bool hypotheses = out.product_is_identity && out.reducible && out.all_single_block &&
                            out.eigenvalue_product && *out.eigenvalue_product != 1;
    out.applies = hypotheses && out.dimension_at_least_four;
    if (!out.product_is_identity)
        out.reason = "product of the generators is not the identity";
    else if (!out.reducible)
        out.reason = "representation is irreducible";
    else if (!out.all_single_block)
        out.reason = "some generator is not a single Jordan block";
    else if (!out.eigenvalue_product || *out.eigenvalue_product == 1)
        out.reason = "product of the eigenvalues equals 1";
    else if (!out.dimension_at_least_four)
        out.reason = "criterion requires dimension at least 4";
    else
        out.reason = "not the monodromy of a Fuchsian system";
    return out;
}

MonodromyRep bolibrukh_example() {
    const auto mat = [](std::initializer_list<long> v) {
        std::vector<Rat> d;
        for (long x : v) d.emplace_back(x);
        return RatMatrix(4, 4, std::move(d));
    };
    return MonodromyRep({
        mat({1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1}),
        mat({3, 1, 1, -1, -4, -1, 1, 2, 0, 0, 3, 1, 0, 0, -4, -1}),
        mat({-1, 0, 2, -1, 4, -1, 0, 1, 0, 0, -1, 0, 0, 0, 4, -1}),
    });
}

}  // namespace p1split
