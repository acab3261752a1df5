#include "superquant/generators.hpp"

#include "superquant/linalg.hpp"

namespace superquant {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::R: return "R";
        case Gen::E: return "E";
        case Gen::T: return "T";
        case Gen::Sigma: return "S";
        case Gen::Q: return "Q";
        case Gen::Del: return "del";
        case Gen::DelStar: return "del*";
        case Gen::QStar: return "Q*";
        case Gen::D: return "D";
        case Gen::G: return "G";
        case Gen::L: return "L";
        case Gen::DeRham: return "d";
        case Gen::DeRhamStar: return "d*";
    }
    return "?";
}

PolyOp euler_even(const Chart& ch) {
    PolyOp a(ch);
    for (int i = 0; i < ch.n; ++i) {
        OpMono m;
        m.p[i] = 1;
        m.dp[i] = 1;
        a.add_term(m, Scalar::one());
    }
    return a;
}

PolyOp euler_odd(const Chart& ch) {
    PolyOp a(ch);
    for (int i = 0; i < ch.n; ++i) {
        OpMono m;
        m.xi = 1u << i;
        m.dxi = 1u << i;
        a.add_term(m, Scalar::one());
    }
    return a;
}

PolyOp invariant_generator(Gen g, const Chart& ch) {
    PolyOp a(ch);
    const Scalar half_n(frac(ch.n, 2));
    switch (g) {
        case Gen::R:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.p[i] = 2;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::E:
            return euler_even(ch) + PolyOp::identity(ch) * half_n;
        case Gen::T:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.dp[i] = 2;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::Sigma:
            return euler_odd(ch) - PolyOp::identity(ch) * half_n;
        case Gen::Q:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.xi = 1u << i;
                m.p[i] = 1;
                a.add_term(m, Scalar::one());
            }
            return a;
        case Gen::Del:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.xi = 1u << i;
                m.dp[i] = 1;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::DelStar:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.p[i] = 1;
                m.dxi = 1u << i;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::QStar:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.dxi = 1u << i;
                m.dp[i] = 1;
                a.add_term(m, Scalar::one());
            }
            return a;
        case Gen::D:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.dx[i] = 1;
                m.dp[i] = 1;
                a.add_term(m, Scalar::one());
            }
            return a;
        case Gen::G:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.p[i] = 1;
                m.dx[i] = 1;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::L:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.dx[i] = 2;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
        case Gen::DeRham:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.xi = 1u << i;
                m.dx[i] = 1;
                a.add_term(m, Scalar::one());
            }
            return a;
        case Gen::DeRhamStar:
            for (int i = 0; i < ch.n; ++i) {
                OpMono m;
                m.dxi = 1u << i;
                m.dx[i] = 1;
                a.add_term(m, Scalar(ch.eta(i)));
            }
            return a;
    }
    throw Error("unknown generator");
}

PolyOp mul_x_lower(const Chart& ch, int i) {
    return PolyOp::mul(SuperPoly::x(ch, i)) * Scalar(ch.eta(i));
}

PolyOp mul_xi_lower(const Chart& ch, int i) {
    return PolyOp::mul(SuperPoly::xi(ch, i)) * Scalar(ch.eta(i));
}

PolyOp d_p_upper(const Chart& ch, int i) { return PolyOp::d_p(ch, i) * Scalar(ch.eta(i)); }

PolyOp d_xi_upper(const Chart& ch, int i) { return PolyOp::d_xi(ch, i) * Scalar(ch.eta(i)); }

PolyOp mul_p_upper(const Chart& ch, int i) {
    return PolyOp::mul(SuperPoly::p(ch, i)) * Scalar(ch.eta(i));
}

std::string ConfGen::name() const {
    switch (kind) {
        case Translation: return "X_" + std::to_string(i + 1);
        case Rotation: return "X_" + std::to_string(i + 1) + std::to_string(j + 1);
        case Dilation: return "X_0";
        case Inversion: return "Xbar_" + std::to_string(i + 1);
    }
    return "?";
}

std::vector<ConfGen> conformal_basis(const Chart& ch) {
    std::vector<ConfGen> out;
    for (int i = 0; i < ch.n; ++i) out.push_back({ConfGen::Translation, i, 0});
    for (int i = 0; i < ch.n; ++i)
        for (int j = i + 1; j < ch.n; ++j) out.push_back({ConfGen::Rotation, i, j});
    out.push_back({ConfGen::Dilation, 0, 0});
    for (int i = 0; i < ch.n; ++i) out.push_back({ConfGen::Inversion, i, 0});
    return out;
}

VecField::VecField(const Chart& ch) : chart(ch), comp(ch.n, SuperPoly(ch)) {}

VecField vector_field(const ConfGen& g, const Chart& ch) {
    VecField v(ch);
    switch (g.kind) {
        case ConfGen::Translation:
            v.comp[g.i] = SuperPoly::constant(ch, Scalar::one());
            break;
        case ConfGen::Rotation:
            // x_i d_j - x_j d_i
            v.comp[g.j] = SuperPoly::x(ch, g.i) * Scalar(ch.eta(g.i));
            v.comp[g.i] = SuperPoly::x(ch, g.j) * Scalar(-ch.eta(g.j));
            break;
        case ConfGen::Dilation:
            for (int k = 0; k < ch.n; ++k) v.comp[k] = SuperPoly::x(ch, k);
            break;
        case ConfGen::Inversion: {
            // x_j x^j d_i - 2 x_i x^j d_j
            SuperPoly xsq(ch);
            for (int j = 0; j < ch.n; ++j)
                xsq += SuperPoly::x(ch, j) * SuperPoly::x(ch, j) * Scalar(ch.eta(j));
            v.comp[g.i] = xsq;
            for (int j = 0; j < ch.n; ++j)
                v.comp[j] -= SuperPoly::x(ch, g.i) * SuperPoly::x(ch, j) *
                             Scalar(2 * ch.eta(g.i));
            break;
        }
    }
    return v;
}

VecField vf_bracket(const VecField& a, const VecField& b) {
    require_same_chart(a.chart, b.chart);
    VecField r(a.chart);
    for (int k = 0; k < a.chart.n; ++k) {
        SuperPoly c(a.chart);
        for (int j = 0; j < a.chart.n; ++j) {
            c += a.comp[j] * b.comp[k].dx(j);
            c -= b.comp[j] * a.comp[k].dx(j);
        }
        r.comp[k] = c;
    }
    return r;
}

std::vector<Rat> decompose_in_conformal_basis(const VecField& v) {
    const Chart& ch = v.chart;
    auto basis = conformal_basis(ch);
    // Coordinates: coefficient of each x-monomial (deg <= 2) in each component.
    std::vector<Mono> monos;
    {
        Mono m;
        monos.push_back(m);  // 1
        for (int i = 0; i < ch.n; ++i) {
            Mono mi;
            mi.x[i] = 1;
            monos.push_back(mi);
        }
        for (int i = 0; i < ch.n; ++i)
            for (int j = i; j < ch.n; ++j) {
                Mono mij;
                mij.x[i] += 1;
                mij.x[j] += 1;
                monos.push_back(mij);
            }
    }
    auto coords = [&](const VecField& w) {
        std::vector<Scalar> out;
        for (int k = 0; k < ch.n; ++k)
            for (const auto& m : monos) out.push_back(w.comp[k].coeff(m));
        return out;
    };

    ScalarMat mat(ch.n * monos.size(), basis.size());
    for (size_t b = 0; b < basis.size(); ++b) {
        auto col = coords(vector_field(basis[b], ch));
        for (size_t r = 0; r < col.size(); ++r) mat.at(r, b) = col[r];
    }
    auto rhs = coords(v);
    auto sol = solve_linear(mat, rhs);
    if (!sol) throw Error("vector field outside the conformal algebra");
    std::vector<Rat> out;
    out.reserve(sol->size());
    for (auto& s : *sol) out.push_back(s.to_rational());
    return out;
}

}  // namespace superquant
