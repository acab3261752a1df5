#include "superquant/spinor_operator.hpp"

#include "superquant/linalg.hpp"

#include <sstream>

namespace superquant {

SpinorOp SpinorOp::identity(const CliffordRep& rep) {
    SpinorOp a(rep.chart(), rep.dim());
    a.add_term(zero_exp(), zero_exp(), SpinMat::identity(rep.dim()));
    return a;
}

void SpinorOp::add_term(const ExpVec& x, const ExpVec& dx, const SpinMat& m) {
    if (m.is_zero()) return;
    auto key = std::make_pair(x, dx);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, m);
    } else {
        it->second = it->second + m;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpinorOp SpinorOp::operator-() const {
    SpinorOp r(chart_, dim_);
    for (const auto& [k, m] : terms_) r.terms_.emplace(k, -m);
    return r;
}

SpinorOp SpinorOp::operator+(const SpinorOp& o) const {
    require_same_chart(chart_, o.chart_);
    SpinorOp r = *this;
    for (const auto& [k, m] : o.terms_) r.add_term(k.first, k.second, m);
    return r;
}

SpinorOp SpinorOp::operator-(const SpinorOp& o) const { return *this + (-o); }

SpinorOp SpinorOp::operator*(const Scalar& c) const {
    SpinorOp r(chart_, dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, m] : terms_) r.terms_.emplace(k, m * c);
    return r;
}

int SpinorOp::max_x_degree() const {
    int d = 0;
    for (const auto& [k, m] : terms_) d = std::max(d, exp_total(k.first));
    return d;
}

int SpinorOp::derivative_order() const {
    int d = 0;
    for (const auto& [k, m] : terms_) d = std::max(d, exp_total(k.second));
    return d;
}

std::string SpinorOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, m] : terms_) {
        if (!first) os << " + ";
        os << "[matrix]";
        for (int i = 0; i < chart_.n; ++i)
            for (int t = 0; t < k.first[i]; ++t) os << "*x" << (i + 1);
        for (int i = 0; i < chart_.n; ++i)
            for (int t = 0; t < k.second[i]; ++t) os << "*Dx" << (i + 1);
        first = false;
    }
    return os.str();
}

namespace {
long falling(int a, int c) {
    long r = 1;
    for (int j = 0; j < c; ++j) r *= (a - j);
    return r;
}
long weyl_weight(int c, int a, int j) {
    long r = 1;
    for (int t = 0; t < j; ++t) r = r * (c - t) / (t + 1);
    return r * falling(a, j);
}
}  // namespace

SpinorOp compose(const SpinorOp& a, const SpinorOp& b) {
    require_same_chart(a.chart(), b.chart());
    const Chart& ch = a.chart();
    SpinorOp r(ch, a.dim() ? a.dim() : b.dim());
    for (const auto& [k1, m1] : a.terms()) {
        for (const auto& [k2, m2] : b.terms()) {
            SpinMat prod = m1 * m2;
            if (prod.is_zero()) continue;
            std::array<int, kMaxDim> maxj{};
            for (int i = 0; i < ch.n; ++i) maxj[i] = std::min<int>(k1.second[i], k2.first[i]);
            std::array<int, kMaxDim> j{};
            while (true) {
                long weight = 1;
                for (int i = 0; i < ch.n; ++i)
                    if (j[i]) weight *= weyl_weight(k1.second[i], k2.first[i], j[i]);
                ExpVec x{}, dx{};
                for (int i = 0; i < ch.n; ++i) {
                    x[i] = static_cast<uint8_t>(k1.first[i] + k2.first[i] - j[i]);
                    dx[i] = static_cast<uint8_t>(k1.second[i] + k2.second[i] - j[i]);
                }
                r.add_term(x, dx, prod * Scalar(weight));
                int pos = 0;
                for (; pos < ch.n; ++pos) {
                    if (j[pos] < maxj[pos]) {
                        ++j[pos];
                        break;
                    }
                    j[pos] = 0;
                }
                if (pos == ch.n) break;
            }
        }
    }
    return r;
}

int hamiltonian_order(const SpinorOp& a, const CliffordRep& rep) {
    int order = 0;
    for (const auto& [k, m] : a.terms()) {
        auto coords = rep.clifford_coordinates(m);
        int cliff = 0;
        for (uint32_t mask = 0; mask < coords.size(); ++mask)
            if (!coords[mask].is_zero()) cliff = std::max(cliff, popcount_mask(mask));
        order = std::max(order, 2 * exp_total(k.second) + cliff);
    }
    return order;
}

SpinorOp normal_order(const SuperPoly& p, const CliffordRep& rep) {
    SpinorOp r(p.chart(), rep.dim());
    Scalar inv_sqrt2 = Scalar::sqrt2() * Scalar(Rat(1, 2));  // 1/sqrt2
    for (const auto& [m, c] : p.terms()) {
        int k = m.p_degree(), kappa = m.xi_degree();
        Scalar scale = c * Scalar::hbar_over_i().pow(k) * inv_sqrt2.pow(kappa);
        r.add_term(m.x, m.p, rep.gamma_word(m.xi) * scale);
    }
    return r;
}

SuperPoly hamiltonian_symbol(const SpinorOp& a, int ell, const CliffordRep& rep) {
    SuperPoly out(a.chart());
    for (const auto& [k, m] : a.terms()) {
        auto coords = rep.clifford_coordinates(m);
        int base = 2 * exp_total(k.second);
        for (uint32_t mask = 0; mask < coords.size(); ++mask) {
            if (coords[mask].is_zero()) continue;
            int level = base + popcount_mask(mask);
            if (level > ell)
                throw Error("operator exceeds the requested Hamiltonian order");
            if (level != ell) continue;
            Mono mono;
            mono.x = k.first;
            mono.p = k.second;
            mono.xi = mask;
            out.add_term(mono, coords[mask]);
        }
    }
    return out;
}

Scalar symbol_roundtrip_scale(int k, int kappa) {
    Scalar half_sqrt2 = Scalar::sqrt2() * Scalar(Rat(1, 2));
    return Scalar::hbar_over_i().pow(k) * half_sqrt2.pow(kappa);
}

SpinorOp dirac(const CliffordRep& rep) {
    SpinorOp r(rep.chart(), rep.dim());
    for (int i = 0; i < rep.chart().n; ++i) {
        ExpVec dx{};
        dx[i] = 1;
        r.add_term(zero_exp(), dx, rep.gamma(i));
    }
    return r;
}

SpinorOp adjoint(const SpinorOp& a, const CliffordRep& rep) {
    if (rep.chart().q != 0)
        throw Error("adjoint is only defined for Euclidean signature here");
    const Chart& ch = rep.chart();
    // pairing by the chirality element: M -> chi^{-1} M^dagger chi, which
    // makes each gamma^i self-adjoint
    SpinMat chi = rep.chirality();
    Scalar chi_sq = (chi * chi).at(0, 0);
    SpinMat chi_inv = chi * chi_sq.inv();
    SpinorOp out(ch, rep.dim());
    for (const auto& [k, m] : a.terms()) {
        long sign = exp_total(k.second) % 2 == 0 ? 1 : -1;
        SpinMat mt = chi_inv * m.dagger() * chi * Scalar(sign);
        // (-d)^c o (x^a M^t), reordered to normal form
        SpinorOp dword(ch, rep.dim());
        dword.add_term(zero_exp(), k.second, SpinMat::identity(rep.dim()));
        SpinorOp xword(ch, rep.dim());
        xword.add_term(k.first, zero_exp(), mt);
        out = out + compose(dword, xword);
    }
    return out;
}

SpinorOp kosmann_lie_derivative(const ConfGen& g, const Rat& lambda, const CliffordRep& rep) {
    const Chart& ch = rep.chart();
    VecField v = vector_field(g, ch);
    SpinorOp out(ch, rep.dim());
    SpinMat id = SpinMat::identity(rep.dim());
    for (int i = 0; i < ch.n; ++i) {
        for (const auto& [m, c] : v.comp[i].terms()) {
            ExpVec dx{};
            dx[i] = 1;
            out.add_term(m.x, dx, id * c);
        }
    }
    SuperPoly div(ch);
    for (int i = 0; i < ch.n; ++i) div += v.comp[i].dx(i);
    for (const auto& [m, c] : div.terms()) out.add_term(m.x, zero_exp(), id * (c * Scalar(lambda)));
    for (int i = 0; i < ch.n; ++i)
        for (int j = 0; j < ch.n; ++j) {
            // (1/8)(d_j X_i - d_i X_j) gamma^i gamma^j; on a rotation this
            // is the spin generator -(1/4)[gamma_a, gamma_b], the sign the
            // negative-square Clifford convention requires
            SuperPoly anti = v.comp[i].dx(j) * Scalar(ch.eta(i)) -
                             v.comp[j].dx(i) * Scalar(ch.eta(j));
            if (anti.is_zero()) continue;
            SpinMat gij = rep.gamma(i) * rep.gamma(j) * Scalar(Rat(1, 8));
            for (const auto& [m, c] : anti.terms()) out.add_term(m.x, zero_exp(), gij * c);
        }
    return out;
}

namespace {

std::vector<ExpVec> exps_of_total(const Chart& ch, int total) {
    std::vector<ExpVec> out;
    std::vector<Mono> basis = fiber_basis(ch, total, 0);
    for (const auto& m : basis) out.push_back(m.p);
    return out;
}

}  // namespace

RightDivision right_divide(const SpinorOp& a, const CliffordRep& rep, int max_order,
                           int max_xdeg) {
    const Chart& ch = rep.chart();
    if (max_order < 0) max_order = std::max(0, a.derivative_order() - 1);
    if (max_xdeg < 0) max_xdeg = a.max_x_degree() + 2;
    size_t dim = rep.dim();

    SpinorOp quotient(ch, dim);
    SpinorOp residual = a;
    SpinorOp dop = dirac(rep);

    for (int m = residual.derivative_order(); m >= 1; --m) {
        // top-order blocks of the residual, per x-exponent
        std::map<ExpVec, std::map<ExpVec, SpinMat>> top;
        for (const auto& [k, mat] : residual.terms())
            if (exp_total(k.second) == m) top[k.first][k.second] = mat;
        if (top.empty()) continue;
        if (m - 1 > max_order || m - 1 < 0) {
            return {RightDivision::InconclusiveAtBound, quotient, residual};
        }
        auto cs = exps_of_total(ch, m - 1);
        auto cps = exps_of_total(ch, m);
        SpinorOp bm(ch, dim);
        bool progressed = false;
        for (auto& [xexp, block] : top) {
            if (exp_total(xexp) > max_xdeg)
                return {RightDivision::InconclusiveAtBound, quotient, residual};
            // Solve per spinor row: unknowns u[(c, t)], equations
            // sum_{j} M_{c'-e_j} gamma^j = A_{c'}.
            for (size_t row = 0; row < dim; ++row) {
                ScalarMat mat(cps.size() * dim, cs.size() * dim);
                std::vector<Scalar> rhs(cps.size() * dim, Scalar::zero());
                for (size_t cpi = 0; cpi < cps.size(); ++cpi) {
                    auto it = block.find(cps[cpi]);
                    if (it != block.end())
                        for (size_t s = 0; s < dim; ++s)
                            rhs[cpi * dim + s] = it->second.at(row, s);
                    for (int j = 0; j < ch.n; ++j) {
                        if (cps[cpi][j] == 0) continue;
                        ExpVec c = cps[cpi];
                        c[j] -= 1;
                        size_t ci = 0;
                        while (ci < cs.size() && !(cs[ci] == c)) ++ci;
                        for (size_t t = 0; t < dim; ++t)
                            for (size_t s = 0; s < dim; ++s)
                                mat.at(cpi * dim + s, ci * dim + t) += rep.gamma(j).at(t, s);
                    }
                }
                auto res = solve_with_residual(mat, rhs);
                for (size_t ci = 0; ci < cs.size(); ++ci) {
                    SpinMat mrow(dim);
                    bool nz = false;
                    for (size_t t = 0; t < dim; ++t) {
                        mrow.at(row, t) = res.x[ci * dim + t];
                        nz = nz || !mrow.at(row, t).is_zero();
                    }
                    if (nz) {
                        bm.add_term(xexp, cs[ci], mrow);
                        progressed = true;
                    }
                }
            }
        }
        if (!bm.is_zero()) {
            quotient = quotient + bm;
            residual = residual - compose(bm, dop);
        }
        // whatever is left at order m is genuinely outside the ideal
        SpinorOp stuck(ch, dim);
        for (const auto& [k, mat] : residual.terms())
            if (exp_total(k.second) >= m) stuck.add_term(k.first, k.second, mat);
        if (!stuck.is_zero()) {
            // move the stuck part out of the running residual
            SpinorOp rest = residual - stuck;
            RightDivision deeper = right_divide(rest, rep, max_order, max_xdeg);
            return {deeper.verdict == RightDivision::InconclusiveAtBound
                        ? RightDivision::InconclusiveAtBound
                        : RightDivision::Refuted,
                    quotient + deeper.quotient, stuck + deeper.remainder};
        }
        (void)progressed;
    }
    if (residual.is_zero()) return {RightDivision::Exact, quotient, residual};
    return {RightDivision::Refuted, quotient, residual};
}

std::optional<SpinorOp> higher_symmetry_partner(const SpinorOp& d1, const CliffordRep& rep) {
    SpinorOp lhs = compose(dirac(rep), d1);
    RightDivision div = right_divide(lhs, rep);
    if (div.verdict == RightDivision::Exact) return div.quotient;
    return std::nullopt;
}

}  // namespace superquant
