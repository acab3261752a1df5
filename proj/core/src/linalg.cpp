#include "superquant/linalg.hpp"

#include "superquant/super_poly.hpp"

#include <algorithm>

namespace superquant {

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
    ScalarMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& w = o.at(k, j);
                if (w.is_zero()) continue;
                r.at(i, j) += v * w;
            }
        }
    return r;
}

std::vector<Scalar> ScalarMat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const Scalar& m = at(i, j);
            if (m.is_zero() || v[j].is_zero()) continue;
            r[i] += m * v[j];
        }
    return r;
}

std::vector<size_t> rref(ScalarMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pr, j));
        Scalar inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(ScalarMat m) { return rref(m).size(); }

SolveResult solve_with_residual(const ScalarMat& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw Error("solve dimension mismatch");
    ScalarMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);

    SolveResult res;
    res.x.assign(m.cols(), Scalar::zero());
    res.residual.assign(m.rows(), Scalar::zero());
    res.consistent = true;

    // Rows whose pivot sits in the rhs column are the inconsistent part.
    // Map each such rref row back to a residual living in the original row
    // space: we only need *a* certificate that b - M x is nonzero, and
    // b - M x itself serves once x is assembled, so compute x first.
    size_t row = 0;
    for (size_t r = 0; r < pivots.size(); ++r, ++row) {
        if (pivots[r] == m.cols()) {
            res.consistent = false;
            continue;
        }
        res.x[pivots[r]] = aug.at(r, m.cols());
    }
    // residual = b - M x (exact)
    auto mx = m.apply(res.x);
    bool any = false;
    for (size_t i = 0; i < m.rows(); ++i) {
        res.residual[i] = b[i] - mx[i];
        if (!res.residual[i].is_zero()) any = true;
    }
    res.consistent = !any;
    return res;
}

std::optional<std::vector<Scalar>> solve_linear(const ScalarMat& m, const std::vector<Scalar>& b) {
    auto res = solve_with_residual(m, b);
    if (!res.consistent) return std::nullopt;
    return res.x;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMat& m) {
    ScalarMat r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero());
        v[free_col] = Scalar::one();
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            v[pivots[pr]] = -r.at(pr, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMat invert(const ScalarMat& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    size_t n = m.rows();
    ScalarMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one();
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw Error("singular matrix");
    ScalarMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

namespace {
void enumerate_p(const Chart& ch, int k, int pos, ExpVec& cur, std::vector<ExpVec>& out) {
    if (pos == ch.n) {
        if (k == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e <= k; ++e) {
        cur[pos] = static_cast<uint8_t>(e);
        enumerate_p(ch, k - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}
}  // namespace

std::vector<Mono> fiber_basis(const Chart& ch, int k, int kappa) {
    std::vector<Mono> basis;
    if (k < 0 || kappa < 0 || kappa > ch.n) return basis;
    std::vector<ExpVec> pexps;
    ExpVec cur = zero_exp();
    enumerate_p(ch, k, 0, cur, pexps);
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << ch.n); ++m)
        if (popcount_mask(m) == kappa) masks.push_back(m);
    basis.reserve(pexps.size() * masks.size());
    for (uint32_t mask : masks)
        for (const auto& pe : pexps) {
            Mono m;
            m.p = pe;
            m.xi = mask;
            basis.push_back(m);
        }
    std::sort(basis.begin(), basis.end());
    return basis;
}

size_t fiber_index(const std::vector<Mono>& basis, const Mono& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) throw Error("monomial outside fiber basis");
    return static_cast<size_t>(it - basis.begin());
}

}  // namespace superquant
