#pragma once

#include "superquant/super_poly.hpp"

#include <random>

namespace superquant::testing {

/// Deterministic generator of small random super-polynomials for the
/// property tests. Coefficients are small integers plus occasional i.
class Sampler {
  public:
    Sampler(Chart ch, uint64_t seed) : ch_(ch), rng_(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

    Mono mono(int max_x, int max_p) {
        Mono m;
        int dx = uniform(0, max_x);
        for (int t = 0; t < dx; ++t) m.x[uniform(0, ch_.n - 1)]++;
        int dp = uniform(0, max_p);
        for (int t = 0; t < dp; ++t) m.p[uniform(0, ch_.n - 1)]++;
        for (int i = 0; i < ch_.n; ++i)
            if (uniform(0, 2) == 0) m.xi |= 1u << i;
        return m;
    }

    Scalar coeff() {
        Scalar c(uniform(-3, 3));
        if (uniform(0, 3) == 0) c = c + Scalar::i() * Scalar(uniform(-2, 2));
        if (c.is_zero()) c = Scalar::one();
        return c;
    }

    SuperPoly poly(int terms, int max_x = 2, int max_p = 2) {
        SuperPoly f(ch_);
        for (int t = 0; t < terms; ++t) f.add_term(mono(max_x, max_p), coeff());
        return f;
    }

    /// Parity-homogeneous sample (even when want_even, else odd); may be zero.
    SuperPoly homogeneous(int terms, bool want_even, int max_x = 2, int max_p = 2) {
        SuperPoly f = poly(terms, max_x, max_p);
        return want_even ? f.even_part() : f.odd_part();
    }

  private:
    Chart ch_;
    std::mt19937_64 rng_;
};

}  // namespace superquant::testing
