#pragma once

#include "superquant/scalar.hpp"

#include <array>
#include <cstdint>

namespace superquant {

inline constexpr int kMaxDim = 16;

struct ChartMismatchError : Error {
    using Error::Error;
};

/// Flat pseudo-Euclidean chart: dimension n = p + q (n even), diagonal
/// metric eta with p entries +1 followed by q entries -1.
struct Chart {
    int n = 0, p = 0, q = 0;

    Chart() = default;
    Chart(int p_, int q_) : n(p_ + q_), p(p_), q(q_) {
        if (n < 2 || n % 2 != 0) throw Error("chart dimension must be even and >= 2");
        if (p < 0 || q < 0) throw Error("invalid signature");
        if (n > kMaxDim) throw Error("chart dimension exceeds supported maximum");
    }
    static Chart euclidean(int n) { return Chart(n, 0); }
    static Chart lorentzian(int n) { return Chart(n - 1, 1); }

    /// eta_{ii} = eta^{ii}, i in [0, n).
    int eta(int i) const { return i < p ? 1 : -1; }

    bool operator==(const Chart& o) const { return n == o.n && p == o.p && q == o.q; }
    bool operator!=(const Chart& o) const { return !(*this == o); }
};

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (a != b) throw ChartMismatchError("chart mismatch");
}

using ExpVec = std::array<uint8_t, kMaxDim>;

inline ExpVec zero_exp() {
    ExpVec e{};
    return e;
}

inline int exp_total(const ExpVec& e) {
    int t = 0;
    for (auto v : e) t += v;
    return t;
}

inline int popcount_mask(uint32_t m) { return __builtin_popcount(m); }

/// Parity of the number of set bits of `mask` strictly below bit `i`.
inline int sign_below(uint32_t mask, int i) {
    uint32_t below = mask & ((1u << i) - 1u);
    return (popcount_mask(below) % 2 == 0) ? 1 : -1;
}

/// Sign of merging two increasing Grassmann words: xi^A * xi^B with A,B
/// disjoint equals sign * xi^{A|B}. Returns 0 on overlap.
inline int merge_sign(uint32_t a, uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    uint32_t bb = b;
    while (bb) {
        int i = __builtin_ctz(bb);
        bb &= bb - 1;
        uint32_t above = a & ~((1u << (i + 1)) - 1u);
        inversions += popcount_mask(above);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace superquant
