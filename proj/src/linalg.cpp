#include "p1split/linalg.hpp"

#include <utility>

namespace p1split {

namespace {

using IntRow = std::vector<Int>;

// Each row scaled by the lcm of its denominators.
std::vector<IntRow> integer_rows(const RatMatrix& m) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, m(r, c).get_den());
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = Rat(m(r, c) * scale).get_num();
    }
    return rows;
}

}  // namespace

RowEchelon rref(const RatMatrix& m) {
    auto a = integer_rows(m);
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();

    // Bareiss: every division by the previous pivot is exact.
    std::vector<std::size_t> pivots;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[row], a[piv]);
        const Int& p = a[row][col];
        for (std::size_t i = row + 1; i < nrows; ++i) {
            const Int f = a[i][col];
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Int v = p * a[i][j] - f * a[row][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }

    const std::size_t r = pivots.size();
    RatMatrix red(r, ncols);
    for (std::size_t i = 0; i < r; ++i) {
        Rat inv_p(Int(1), a[i][pivots[i]]);
        inv_p.canonicalize();
        for (std::size_t j = 0; j < ncols; ++j) {
            if (a[i][j] == 0) continue;
            Rat v(a[i][j]);
            v *= inv_p;
            red(i, j) = v;
        }
    }
    // Clear above each pivot, bottom up.
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rat f = red(k, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < ncols; ++j)
                if (red(i, j) != 0) red(k, j) -= f * red(i, j);
        }
    }
    return {std::move(red), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) {
    return rref(m).pivots.size();
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const auto ech = rref(m);
    const std::size_t ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(ncols);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    RatMatrix a = m;
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            a.swap_rows(piv, col);
            result = -result;
        }
        const Rat p = a(col, col);
        result *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rat f = a(i, col) / p;
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return result;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (!m.is_square() || b.size() != m.rows()) throw DimensionMismatch("solve: shape mismatch");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const auto ech = rref(aug);
    if (ech.pivots.size() != n || ech.pivots.back() != n - 1) {
        // Either singular or the augmented column became a pivot.
        if (n == 0) return RatVector{};
        return std::nullopt;
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ech.reduced(i, n);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto ech = rref(aug);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

Poly charpoly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier: exact over Q.
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        const Rat t = trace(m * mk);
        c[n - k] = -t / static_cast<long>(k);
    }
    return Poly(std::move(c));
}

RatVector EchelonBasis::reduce(RatVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = v[pivots_[i]];
        if (f == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < dim_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return v;
}

bool EchelonBasis::insert(const RatVector& v) {
    if (v.size() != dim_) throw DimensionMismatch("echelon basis: vector length mismatch");
    RatVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    const Rat lead = r[p];
    for (std::size_t j = p; j < dim_; ++j) r[j] /= lead;
    // Keep existing rows reduced against the new pivot so reduce() needs one pass.
    for (auto& row : rows_) {
        const Rat f = row[p];
        if (f == 0) continue;
        for (std::size_t j = p; j < dim_; ++j)
            if (r[j] != 0) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(const RatVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("echelon basis: vector length mismatch");
    const RatVector r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

}  // namespace p1split
