#include "superquant/actions.hpp"

#include <functional>

namespace superquant {

namespace {

/// d_i X^j as polynomials in x.
SuperPoly d_comp(const VecField& v, int i, int j) { return v.comp[j].dx(i); }

SuperPoly divergence(const VecField& v) {
    SuperPoly s(v.chart);
    for (int i = 0; i < v.chart.n; ++i) s += v.comp[i].dx(i);
    return s;
}

}  // namespace

PolyOp conformal_action_T(const ConfGen& g, const Rat& delta, const Chart& ch) {
    VecField v = vector_field(g, ch);
    PolyOp a(ch);
    for (int i = 0; i < ch.n; ++i) a += compose(PolyOp::mul(v.comp[i]), PolyOp::d_x(ch, i));
    for (int i = 0; i < ch.n; ++i)
        for (int j = 0; j < ch.n; ++j) {
            SuperPoly dxj = d_comp(v, i, j);
            if (dxj.is_zero()) continue;
            PolyOp rot = compose(PolyOp::mul(SuperPoly::xi(ch, i)), PolyOp::d_xi(ch, j)) -
                         compose(PolyOp::mul(SuperPoly::p(ch, j)), PolyOp::d_p(ch, i));
            a += compose(PolyOp::mul(dxj), rot);
        }
    SuperPoly div = divergence(v);
    if (!div.is_zero()) {
        PolyOp weight = PolyOp::identity(ch) * Scalar(delta) -
                        euler_odd(ch) * Scalar(frac(1, ch.n));
        a += compose(PolyOp::mul(div), weight);
    }
    return a;
}

PolyOp hamiltonian_action(const ConfGen& g, const Rat& delta, const Chart& ch) {
    PolyOp a = conformal_action_T(g, delta, ch);
    VecField v = vector_field(g, ch);
    Scalar c = Scalar(Rat(-1, 2)) * Scalar::hbar_over_i();  // -(hbar/2i)
    for (int i = 0; i < ch.n; ++i)
        for (int j = 0; j < ch.n; ++j)
            for (int k = 0; k < ch.n; ++k) {
                SuperPoly dd = v.comp[k].dx(i).dx(j);
                if (dd.is_zero()) continue;
                PolyOp word = compose(mul_xi_lower(ch, k),
                                      compose(PolyOp::mul(SuperPoly::xi(ch, j)),
                                              PolyOp::d_p(ch, i)));
                a += compose(PolyOp::mul(dd), word) * c;
            }
    return a;
}

PolyOp quantum_action(const ConfGen& g, const Rat& lambda, const Rat& mu, const Chart& ch) {
    Rat delta = mu - lambda;
    PolyOp a = hamiltonian_action(g, delta, ch);
    VecField v = vector_field(g, ch);

    Scalar c1 = Scalar(Rat(1, 4)) * Scalar::hbar_over_i();  // hbar/4i
    for (int j = 0; j < ch.n; ++j)
        for (int k = 0; k < ch.n; ++k)
            for (int i = 0; i < ch.n; ++i) {
                SuperPoly dd = v.comp[i].dx(j).dx(k);
                if (dd.is_zero()) continue;
                // chi^j_i = xi^j d/dxi^i - xi_i d/dxi_j + (1/2) d/dxi_j d/dxi^i
                PolyOp chi = compose(PolyOp::mul(SuperPoly::xi(ch, j)), PolyOp::d_xi(ch, i)) -
                             compose(mul_xi_lower(ch, i), d_xi_upper(ch, j)) +
                             compose(d_xi_upper(ch, j), PolyOp::d_xi(ch, i)) * Scalar(Rat(1, 2));
                PolyOp inner = chi - compose(PolyOp::mul(SuperPoly::p(ch, i)),
                                             PolyOp::d_p(ch, j)) * Scalar(2);
                a += compose(PolyOp::mul(dd), compose(inner, PolyOp::d_p(ch, k))) * c1;
            }

    SuperPoly div = divergence(v);
    Scalar c2 = -Scalar(lambda) * Scalar::hbar_over_i();  // -(hbar/i) lambda
    for (int j = 0; j < ch.n; ++j) {
        SuperPoly ddiv = div.dx(j);
        if (ddiv.is_zero()) continue;
        a += compose(PolyOp::mul(ddiv), PolyOp::d_p(ch, j)) * c2;
    }
    return a;
}

std::vector<std::string> morphism_defects(const std::function<PolyOp(const ConfGen&)>& rho,
                                          const Chart& ch) {
    auto basis = conformal_basis(ch);
    std::vector<PolyOp> images;
    images.reserve(basis.size());
    for (const auto& g : basis) images.push_back(rho(g));

    std::vector<std::string> defects;
    for (size_t a = 0; a < basis.size(); ++a) {
        for (size_t b = a + 1; b < basis.size(); ++b) {
            PolyOp lhs = compose(images[a], images[b]) - compose(images[b], images[a]);
            auto coeffs = decompose_in_conformal_basis(
                vf_bracket(vector_field(basis[a], ch), vector_field(basis[b], ch)));
            PolyOp rhs(ch);
            for (size_t k = 0; k < basis.size(); ++k) {
                if (coeffs[k] == 0) continue;
                rhs += images[k] * Scalar(coeffs[k]);
            }
            if (!(lhs == rhs)) defects.push_back(basis[a].name() + "," + basis[b].name());
        }
    }
    return defects;
}

}  // namespace superquant
