#pragma once

#include "superquant/chart.hpp"

#include <vector>

namespace superquant {

/// Dense square matrix of Scalars, sized 2^{n/2} for the spinor modules.
class SpinMat {
  public:
    SpinMat() = default;
    explicit SpinMat(size_t dim) : dim_(dim), data_(dim * dim, Scalar::zero()) {}
    static SpinMat identity(size_t dim);

    size_t dim() const { return dim_; }
    Scalar& at(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * dim_ + c]; }

    bool is_zero() const;
    SpinMat operator-() const;
    SpinMat operator+(const SpinMat& o) const;
    SpinMat operator-(const SpinMat& o) const;
    SpinMat operator*(const SpinMat& o) const;
    SpinMat operator*(const Scalar& c) const;
    bool operator==(const SpinMat& o) const { return dim_ == o.dim_ && data_ == o.data_; }

    Scalar trace() const;
    /// Conjugate transpose (entry-wise Scalar conjugation).
    SpinMat dagger() const;

  private:
    size_t dim_ = 0;
    std::vector<Scalar> data_;
};

/// Gamma matrices of the chart: gamma^i gamma^j + gamma^j gamma^i =
/// -2 eta^{ij}, built from Pauli-type tensor blocks, with i-factors on the
/// spacelike directions.
class CliffordRep {
  public:
    explicit CliffordRep(const Chart& ch);

    const Chart& chart() const { return chart_; }
    size_t dim() const { return dim_; }
    const SpinMat& gamma(int i) const { return gammas_[i]; }

    /// Product gamma^{s_1} ... gamma^{s_m} over the increasing word S.
    SpinMat gamma_word(uint32_t mask) const;

    /// Chirality element gamma^1 ... gamma^n (anticommutes with each
    /// gamma^i for even n); used as the pairing matrix for adjoints.
    const SpinMat& chirality() const { return chirality_; }

    /// Exact expansion of M in the Clifford basis {gamma^S}; index by mask.
    std::vector<Scalar> clifford_coordinates(const SpinMat& m) const;

  private:
    Chart chart_;
    size_t dim_;
    std::vector<SpinMat> gammas_;
    std::vector<SpinMat> basis_;        // gamma^S per mask
    std::vector<Scalar> basis_square_;  // scalar value of (gamma^S)^2
    SpinMat chirality_;
};

}  // namespace superquant
