#pragma once

#include "superquant/chart.hpp"

#include <optional>
#include <vector>

namespace superquant {

struct Mono;

/// Dense matrix over the exact coefficient field.
class ScalarMat {
  public:
    ScalarMat() = default;
    ScalarMat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero()) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ScalarMat operator*(const ScalarMat& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(ScalarMat& m);

size_t rank(ScalarMat m);

/// One exact solution of M x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const ScalarMat& m, const std::vector<Scalar>& b);

/// Particular solution plus the inconsistent residual: b = M x + r with r
/// supported on the rows that cannot be matched. r is empty-normed (all
/// zero) exactly when the system is consistent.
struct SolveResult {
    std::vector<Scalar> x;
    std::vector<Scalar> residual;
    bool consistent = false;
};
SolveResult solve_with_residual(const ScalarMat& m, const std::vector<Scalar>& b);

/// Basis of the right kernel of M.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMat& m);

/// Exact inverse; throws on singular input.
ScalarMat invert(const ScalarMat& m);

/// All fiber monomials p^b xi^S of bidegree (k, kappa) on the chart, in a
/// fixed deterministic order. Empty when k < 0 or kappa outside [0, n].
std::vector<Mono> fiber_basis(const Chart& ch, int k, int kappa);

/// Index of a fiber monomial within the basis returned by fiber_basis.
size_t fiber_index(const std::vector<Mono>& basis, const Mono& m);

}  // namespace superquant
