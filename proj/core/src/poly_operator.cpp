#include "superquant/poly_operator.hpp"

#include <sstream>
#include <tuple>

namespace superquant {

PolyOp PolyOp::identity(Chart chart) {
    PolyOp a(chart);
    a.add_term(OpMono{}, Scalar::one());
    return a;
}

PolyOp PolyOp::mul(const SuperPoly& f) {
    PolyOp a(f.chart());
    for (const auto& [m, c] : f.terms()) {
        OpMono om;
        om.x = m.x;
        om.p = m.p;
        om.xi = m.xi;
        a.add_term(om, c);
    }
    return a;
}

PolyOp PolyOp::term(Chart chart, const OpMono& m, Scalar c) {
    PolyOp a(chart);
    a.add_term(m, c);
    return a;
}

PolyOp PolyOp::d_x(Chart chart, int i) {
    OpMono m;
    m.dx[i] = 1;
    return term(chart, m, Scalar::one());
}

PolyOp PolyOp::d_p(Chart chart, int i) {
    OpMono m;
    m.dp[i] = 1;
    return term(chart, m, Scalar::one());
}

PolyOp PolyOp::d_xi(Chart chart, int i) {
    OpMono m;
    m.dxi = 1u << i;
    return term(chart, m, Scalar::one());
}

void PolyOp::add_term(const OpMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyOp PolyOp::operator-() const {
    PolyOp r(chart_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyOp PolyOp::operator+(const PolyOp& o) const {
    if (terms_.empty()) return o;
    if (o.terms_.empty()) return *this;
    require_same_chart(chart_, o.chart_);
    PolyOp r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PolyOp PolyOp::operator-(const PolyOp& o) const { return *this + (-o); }

PolyOp PolyOp::operator*(const Scalar& c) const {
    PolyOp r(chart_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

PolyOp& PolyOp::operator+=(const PolyOp& o) {
    *this = *this + o;
    return *this;
}

PolyOp& PolyOp::operator-=(const PolyOp& o) {
    *this = *this - o;
    return *this;
}

int PolyOp::parity() const {
    if (terms_.empty()) return 0;
    int par = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != par) return -1;
    return par;
}

namespace {

/// Falling factorial a (a-1) ... (a-c+1).
long falling(int a, int c) {
    long r = 1;
    for (int j = 0; j < c; ++j) r *= (a - j);
    return r;
}

/// binom(c,j) binom(a,j) j! — the Weyl reordering weight for moving
/// d^c past x^a and contracting j pairs.
long weyl_weight(int c, int a, int j) {
    long r = 1;
    // C(c,j) * falling(a, j)
    for (int t = 0; t < j; ++t) r = r * (c - t) / (t + 1);
    return r * falling(a, j);
}

struct OddReorder {
    int sign;
    uint32_t s_out;  // remaining multiplication word
    uint32_t t_out;  // remaining derivative word
};

/// Normal order of dxi^T m(xi^S): sum of sign * m(xi^{s_out}) dxi^{t_out}.
void odd_reorder(uint32_t t_mask, uint32_t s_mask, int sign, uint32_t t_done,
                 std::vector<OddReorder>& out) {
    if (t_mask == 0) {
        out.push_back({sign, s_mask, t_done});
        return;
    }
    int t = 31 - __builtin_clz(t_mask);  // rightmost derivative acts first
    uint32_t t_rest = t_mask & ~(1u << t);
    if (s_mask & (1u << t)) {
        int sg = sign_below(s_mask, t);
        odd_reorder(t_rest, s_mask & ~(1u << t), sign * sg, t_done, out);
    }
    int s_par = (popcount_mask(s_mask) % 2 == 0) ? 1 : -1;
    odd_reorder(t_rest, s_mask, sign * s_par, t_done | (1u << t), out);
}

}  // namespace

PolyOp compose(const PolyOp& a, const PolyOp& b) {
    require_same_chart(a.chart(), b.chart());
    const Chart& ch = a.chart();
    PolyOp r(ch);
    std::vector<OddReorder> odd;
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) {
            // Even Weyl contractions, coordinate by coordinate.
            // Collect (coefficient, consumed-x, consumed-p) combinations lazily:
            // enumerate contraction counts per coordinate.
            // Iterate via mixed-radix counters bounded by min(dx1, x2), min(dp1, p2).
            std::array<int, kMaxDim> max_jx{}, max_jp{};
            for (int i = 0; i < ch.n; ++i) {
                max_jx[i] = std::min<int>(m1.dx[i], m2.x[i]);
                max_jp[i] = std::min<int>(m1.dp[i], m2.p[i]);
            }
            odd.clear();
            odd_reorder(m1.dxi, m2.xi, 1, 0, odd);
            if (odd.empty()) continue;

            std::array<int, kMaxDim> jx{}, jp{};
            while (true) {
                long weight = 1;
                for (int i = 0; i < ch.n; ++i) {
                    if (jx[i]) weight *= weyl_weight(m1.dx[i], m2.x[i], jx[i]);
                    if (jp[i]) weight *= weyl_weight(m1.dp[i], m2.p[i], jp[i]);
                }
                for (const auto& od : odd) {
                    int s1 = merge_sign(m1.xi, od.s_out);
                    if (s1 == 0) continue;
                    int s2 = merge_sign(od.t_out, m2.dxi);
                    if (s2 == 0) continue;
                    OpMono m;
                    for (int i = 0; i < ch.n; ++i) {
                        m.x[i] = static_cast<uint8_t>(m1.x[i] + m2.x[i] - jx[i]);
                        m.p[i] = static_cast<uint8_t>(m1.p[i] + m2.p[i] - jp[i]);
                        m.dx[i] = static_cast<uint8_t>(m1.dx[i] + m2.dx[i] - jx[i]);
                        m.dp[i] = static_cast<uint8_t>(m1.dp[i] + m2.dp[i] - jp[i]);
                    }
                    m.xi = m1.xi | od.s_out;
                    m.dxi = od.t_out | m2.dxi;
                    long w = weight * s1 * s2 * od.sign;
                    r.add_term(m, c1 * c2 * Scalar(w));
                }
                // next mixed-radix state
                int pos = 0;
                for (; pos < 2 * ch.n; ++pos) {
                    auto& arr = pos < ch.n ? jx : jp;
                    auto& mx = pos < ch.n ? max_jx : max_jp;
                    int i = pos < ch.n ? pos : pos - ch.n;
                    if (arr[i] < mx[i]) {
                        ++arr[i];
                        break;
                    }
                    arr[i] = 0;
                }
                if (pos == 2 * ch.n) break;
            }
        }
    }
    return r;
}

PolyOp compose(const PolyOp& a, const PolyOp& b, const PolyOp& c) {
    return compose(a, compose(b, c));
}

PolyOp supercommutator(const PolyOp& a, const PolyOp& b) {
    int pa = a.parity(), pb = b.parity();
    if (pa < 0 || pb < 0) throw Error("supercommutator requires parity-homogeneous operators");
    PolyOp ab = compose(a, b);
    PolyOp ba = compose(b, a);
    return (pa == 1 && pb == 1) ? ab + ba : ab - ba;
}

SuperPoly PolyOp::apply(const SuperPoly& f) const {
    require_same_chart(chart_, f.chart());
    SuperPoly r(chart_);
    for (const auto& [om, oc] : terms_) {
        for (const auto& [fm, fc] : f.terms()) {
            long weight = 1;
            bool dead = false;
            for (int i = 0; i < chart_.n && !dead; ++i) {
                if (fm.x[i] < om.dx[i] || fm.p[i] < om.dp[i]) dead = true;
                else {
                    weight *= falling(fm.x[i], om.dx[i]);
                    weight *= falling(fm.p[i], om.dp[i]);
                }
            }
            if (dead || (om.dxi & ~fm.xi)) continue;
            // apply the odd derivative word, rightmost first
            uint32_t cur = fm.xi;
            int sgn = 1;
            uint32_t t = om.dxi;
            while (t) {
                int b = 31 - __builtin_clz(t);
                t &= ~(1u << b);
                sgn *= sign_below(cur, b);
                cur &= ~(1u << b);
            }
            int ms = merge_sign(om.xi, cur);
            if (ms == 0) continue;
            Mono m;
            for (int i = 0; i < chart_.n; ++i) {
                m.x[i] = static_cast<uint8_t>(om.x[i] + fm.x[i] - om.dx[i]);
                m.p[i] = static_cast<uint8_t>(om.p[i] + fm.p[i] - om.dp[i]);
            }
            m.xi = om.xi | cur;
            r.add_term(m, oc * fc * Scalar(weight * sgn * ms));
        }
    }
    return r;
}

std::string PolyOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        auto emit = [&](const ExpVec& e, const char* sym) {
            for (int i = 0; i < chart_.n; ++i)
                for (int k = 0; k < e[i]; ++k) os << "*" << sym << (i + 1);
        };
        emit(m.x, "x");
        emit(m.p, "p");
        for (int i = 0; i < chart_.n; ++i)
            if (m.xi & (1u << i)) os << "*xi" << (i + 1);
        emit(m.dx, "Dx");
        emit(m.dp, "Dp");
        for (int i = 0; i < chart_.n; ++i)
            if (m.dxi & (1u << i)) os << "*Dxi" << (i + 1);
        first = false;
    }
    return os.str();
}

}  // namespace superquant
