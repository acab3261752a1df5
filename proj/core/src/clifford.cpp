#include "superquant/clifford.hpp"

namespace superquant {

SpinMat SpinMat::identity(size_t dim) {
    SpinMat m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar::one();
    return m;
}

bool SpinMat::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

SpinMat SpinMat::operator-() const {
    SpinMat r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

SpinMat SpinMat::operator+(const SpinMat& o) const {
    SpinMat r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

SpinMat SpinMat::operator-(const SpinMat& o) const {
    SpinMat r(dim_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

SpinMat SpinMat::operator*(const SpinMat& o) const {
    SpinMat r(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t k = 0; k < dim_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                const Scalar& w = o.at(k, j);
                if (w.is_zero()) continue;
                r.at(i, j) += v * w;
            }
        }
    return r;
}

SpinMat SpinMat::operator*(const Scalar& c) const {
    SpinMat r(dim_);
    if (c.is_zero()) return r;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

Scalar SpinMat::trace() const {
    Scalar t;
    for (size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

SpinMat SpinMat::dagger() const {
    SpinMat r(dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

namespace {

// 2x2 blocks: sx = [[0,1],[1,0]], sy = [[0,-i],[i,0]], sz = [[1,0],[0,-1]]
enum Block { SX, SY, SZ, ID };

SpinMat block_tensor(const std::vector<Block>& word) {
    size_t dim = 1;
    for (size_t t = 0; t < word.size(); ++t) dim *= 2;
    SpinMat m(dim);
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            Scalar v = Scalar::one();
            for (size_t t = 0; t < word.size() && !v.is_zero(); ++t) {
                int rb = (r >> (word.size() - 1 - t)) & 1;
                int cb = (c >> (word.size() - 1 - t)) & 1;
                switch (word[t]) {
                    case SX: v = rb != cb ? v : Scalar::zero(); break;
                    case SY:
                        v = rb != cb ? v * (rb ? Scalar::i() : -Scalar::i()) : Scalar::zero();
                        break;
                    case SZ: v = rb == cb ? (rb ? -v : v) : Scalar::zero(); break;
                    case ID: v = rb == cb ? v : Scalar::zero(); break;
                }
            }
            m.at(r, c) = v;
        }
    }
    return m;
}

}  // namespace

CliffordRep::CliffordRep(const Chart& ch) : chart_(ch), dim_(1u << (ch.n / 2)) {
    // Hermitian Euclidean blocks first: g_{2t} = sx at slot t, g_{2t+1} =
    // sy at slot t, padded by sz to the left and id to the right; these
    // satisfy g_a g_b + g_b g_a = +2 delta_{ab}. Then gamma^i = i g_i on
    // spacelike directions and gamma^i = g_i on timelike ones, which gives
    // gamma^i gamma^j + gamma^j gamma^i = -2 eta^{ij}.
    int half = ch.n / 2;
    std::vector<SpinMat> herm;
    for (int a = 0; a < ch.n; ++a) {
        std::vector<Block> word(half, ID);
        int slot = a / 2;
        for (int t = 0; t < slot; ++t) word[t] = SZ;
        word[slot] = (a % 2 == 0) ? SX : SY;
        herm.push_back(block_tensor(word));
    }
    for (int i = 0; i < ch.n; ++i) {
        gammas_.push_back(ch.eta(i) > 0 ? herm[i] * Scalar::i() : herm[i]);
    }

    basis_.resize(1u << ch.n, SpinMat(dim_));
    basis_square_.resize(1u << ch.n, Scalar::zero());
    for (uint32_t mask = 0; mask < (1u << ch.n); ++mask) {
        SpinMat m = SpinMat::identity(dim_);
        for (int i = 0; i < ch.n; ++i)
            if (mask & (1u << i)) m = m * gammas_[i];
        basis_[mask] = m;
        SpinMat sq = m * m;
        basis_square_[mask] = sq.at(0, 0);
        for (size_t r = 0; r < dim_; ++r)
            for (size_t c = 0; c < dim_; ++c)
                if (!(sq.at(r, c) == (r == c ? basis_square_[mask] : Scalar::zero())))
                    throw Error("clifford basis element does not square to a scalar");
    }
    chirality_ = basis_[(1u << ch.n) - 1];
}

SpinMat CliffordRep::gamma_word(uint32_t mask) const { return basis_[mask]; }

std::vector<Scalar> CliffordRep::clifford_coordinates(const SpinMat& m) const {
    // tr(M gamma^S) = c_S * tr((gamma^S)^2) since distinct basis words are
    // trace-orthogonal.
    std::vector<Scalar> coords(basis_.size(), Scalar::zero());
    Scalar dim_scalar(static_cast<long>(dim_));
    for (uint32_t mask = 0; mask < basis_.size(); ++mask) {
        Scalar t = (m * basis_[mask]).trace();
        if (t.is_zero()) continue;
        coords[mask] = t / (basis_square_[mask] * dim_scalar);
    }
    return coords;
}

}  // namespace superquant
