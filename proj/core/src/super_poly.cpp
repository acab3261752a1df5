#include "superquant/super_poly.hpp"

#include "superquant/linalg.hpp"

#include <sstream>

namespace superquant {

SuperPoly SuperPoly::constant(Chart chart, Scalar c) {
    SuperPoly f(chart);
    f.add_term(Mono{}, c);
    return f;
}

SuperPoly SuperPoly::x(Chart chart, int i) {
    SuperPoly f(chart);
    Mono m;
    m.x[i] = 1;
    f.add_term(m, Scalar::one());
    return f;
}

SuperPoly SuperPoly::p(Chart chart, int i) {
    SuperPoly f(chart);
    Mono m;
    m.p[i] = 1;
    f.add_term(m, Scalar::one());
    return f;
}

SuperPoly SuperPoly::xi(Chart chart, int i) {
    SuperPoly f(chart);
    Mono m;
    m.xi = 1u << i;
    f.add_term(m, Scalar::one());
    return f;
}

SuperPoly SuperPoly::monomial(Chart chart, const Mono& m, Scalar c) {
    SuperPoly f(chart);
    f.add_term(m, c);
    return f;
}

SuperPoly SuperPoly::charge(Chart chart) {
    SuperPoly f(chart);
    for (int i = 0; i < chart.n; ++i) {
        Mono m;
        m.xi = 1u << i;
        m.p[i] = 1;
        f.add_term(m, Scalar::one());
    }
    return f;
}

SuperPoly SuperPoly::momentum_square(Chart chart) {
    SuperPoly f(chart);
    for (int i = 0; i < chart.n; ++i) {
        Mono m;
        m.p[i] = 2;
        f.add_term(m, Scalar(chart.eta(i)));
    }
    return f;
}

void SuperPoly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar SuperPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
    if (terms_.empty()) return o;
    if (o.terms_.empty()) return *this;
    require_same_chart(chart_, o.chart_);
    SuperPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const { return *this + (-o); }

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    *this = *this + o;
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    *this = *this - o;
    return *this;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) return o;
    require_same_chart(chart_, o.chart_);
    SuperPoly r(chart_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            int sgn = merge_sign(m1.xi, m2.xi);
            if (sgn == 0) continue;
            Mono m;
            for (int i = 0; i < chart_.n; ++i) {
                m.x[i] = static_cast<uint8_t>(m1.x[i] + m2.x[i]);
                m.p[i] = static_cast<uint8_t>(m1.p[i] + m2.p[i]);
            }
            m.xi = m1.xi | m2.xi;
            Scalar c = c1 * c2;
            if (sgn < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

SuperPoly SuperPoly::operator*(const Scalar& c) const {
    SuperPoly r(chart_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

int SuperPoly::parity() const {
    if (terms_.empty()) return 0;
    int par = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != par) return -1;
    return par;
}

SuperPoly SuperPoly::even_part() const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == 0) r.terms_.emplace(m, c);
    return r;
}

SuperPoly SuperPoly::odd_part() const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == 1) r.terms_.emplace(m, c);
    return r;
}

int SuperPoly::max_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
    return d;
}

int SuperPoly::max_p_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.p_degree());
    return d;
}

int SuperPoly::max_xi_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.xi_degree());
    return d;
}

SuperPoly SuperPoly::dx(int i) const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_) {
        if (m.x[i] == 0) continue;
        Mono mm = m;
        mm.x[i] -= 1;
        r.add_term(mm, c * Scalar(static_cast<long>(m.x[i])));
    }
    return r;
}

SuperPoly SuperPoly::dp(int i) const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_) {
        if (m.p[i] == 0) continue;
        Mono mm = m;
        mm.p[i] -= 1;
        r.add_term(mm, c * Scalar(static_cast<long>(m.p[i])));
    }
    return r;
}

SuperPoly SuperPoly::dxi(int i) const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_) {
        if (!(m.xi & (1u << i))) continue;
        Mono mm = m;
        mm.xi &= ~(1u << i);
        int sgn = sign_below(m.xi, i);
        r.add_term(mm, sgn > 0 ? c : -c);
    }
    return r;
}

SuperPoly SuperPoly::conjugate() const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_) {
        int k = m.xi_degree();
        // product reversal of an increasing xi word
        int sgn = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
        Scalar cc = c.conj();
        r.add_term(m, sgn > 0 ? cc : -cc);
    }
    return r;
}

std::map<std::pair<int, int>, SuperPoly> SuperPoly::bigrade() const {
    std::map<std::pair<int, int>, SuperPoly> parts;
    for (const auto& [m, c] : terms_) {
        auto key = std::make_pair(m.p_degree(), m.xi_degree());
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, SuperPoly(chart_)).first;
        it->second.add_term(m, c);
    }
    return parts;
}

SuperPoly SuperPoly::bipart(int k, int kappa) const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_)
        if (m.p_degree() == k && m.xi_degree() == kappa) r.add_term(m, c);
    return r;
}

SuperPoly SuperPoly::xi_part(int kappa) const {
    SuperPoly r(chart_);
    for (const auto& [m, c] : terms_)
        if (m.xi_degree() == kappa) r.add_term(m, c);
    return r;
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        for (int i = 0; i < chart_.n; ++i)
            for (int k = 0; k < m.x[i]; ++k) os << "*x" << (i + 1);
        for (int i = 0; i < chart_.n; ++i)
            for (int k = 0; k < m.p[i]; ++k) os << "*p" << (i + 1);
        for (int i = 0; i < chart_.n; ++i)
            if (m.xi & (1u << i)) os << "*xi" << (i + 1);
        first = false;
    }
    return os.str();
}

SuperPoly poisson(const SuperPoly& f, const SuperPoly& g) {
    require_same_chart(f.chart(), g.chart());
    const Chart& ch = f.chart();
    SuperPoly r(ch);
    auto bracket_homog = [&](const SuperPoly& fh) {
        if (fh.is_zero()) return;
        int par = fh.parity();
        for (int i = 0; i < ch.n; ++i) {
            r += fh.dx(i) * g.dp(i);
            r -= fh.dp(i) * g.dx(i);
        }
        Scalar odd_factor = Scalar::i_over_hbar();
        if (par == 0) odd_factor = -odd_factor;  // -(i/hbar)(-1)^{|F|}
        for (int j = 0; j < ch.n; ++j) {
            SuperPoly t = fh.dxi(j) * g.dxi(j) * odd_factor;
            if (ch.eta(j) < 0) t = -t;
            r += t;
        }
    };
    bracket_homog(f.even_part());
    bracket_homog(f.odd_part());
    return r;
}

IdealWitness ideal_member_qr(const SuperPoly& h) {
    const Chart ch = h.chart();
    IdealWitness w;
    w.a = SuperPoly(ch);
    w.b = SuperPoly(ch);
    if (h.is_zero()) {
        w.member = true;
        return w;
    }
    SuperPoly q = SuperPoly::charge(ch);
    SuperPoly r2 = SuperPoly::momentum_square(ch);

    // Split h by x-monomial and bidegree; Q and R have constant coefficients,
    // so the linear systems decouple completely.
    std::map<std::pair<ExpVec, std::pair<int, int>>, SuperPoly> blocks;
    for (const auto& [m, c] : h.terms()) {
        Mono fib = m;
        fib.x = zero_exp();
        auto key = std::make_pair(m.x, std::make_pair(fib.p_degree(), fib.xi_degree()));
        auto it = blocks.find(key);
        if (it == blocks.end()) it = blocks.emplace(key, SuperPoly(ch)).first;
        it->second.add_term(fib, c);
    }

    for (const auto& [key, target] : blocks) {
        const auto& [xexp, bideg] = key;
        auto [k, kappa] = bideg;
        std::vector<Mono> abasis = fiber_basis(ch, k - 1, kappa - 1);
        std::vector<Mono> bbasis = fiber_basis(ch, k - 2, kappa);
        std::vector<Mono> tbasis = fiber_basis(ch, k, kappa);
        if (abasis.empty() && bbasis.empty()) return w;  // nonzero target, no generators

        ScalarMat mat(tbasis.size(), abasis.size() + bbasis.size());
        auto fill = [&](const std::vector<Mono>& basis, const SuperPoly& gen, size_t col0) {
            for (size_t j = 0; j < basis.size(); ++j) {
                SuperPoly img = SuperPoly::monomial(ch, basis[j], Scalar::one()) * gen;
                for (const auto& [m, c] : img.terms()) {
                    mat.at(fiber_index(tbasis, m), col0 + j) = c;
                }
            }
        };
        fill(abasis, q, 0);
        fill(bbasis, r2, abasis.size());

        std::vector<Scalar> rhs(tbasis.size(), Scalar::zero());
        for (const auto& [m, c] : target.terms()) rhs[fiber_index(tbasis, m)] = c;

        auto sol = solve_linear(mat, rhs);
        if (!sol) return w;  // refuted
        for (size_t j = 0; j < abasis.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            Mono m = abasis[j];
            m.x = xexp;
            w.a.add_term(m, (*sol)[j]);
        }
        for (size_t j = 0; j < bbasis.size(); ++j) {
            if ((*sol)[abasis.size() + j].is_zero()) continue;
            Mono m = bbasis[j];
            m.x = xexp;
            w.b.add_term(m, (*sol)[abasis.size() + j]);
        }
    }
    w.member = true;
    return w;
}

}  // namespace superquant
