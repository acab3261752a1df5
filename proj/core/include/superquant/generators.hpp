#pragma once

#include "superquant/poly_operator.hpp"

#include <string>
#include <vector>

namespace superquant {

/// The 13 isometry-invariant generators acting on tensor symbols.
enum class Gen {
    R,          // eta^{ij} p_i p_j (metric)
    E,          // p d/dp + n/2
    T,          // eta_{ij} d/dp_i d/dp_j (trace)
    Sigma,      // xi d/dxi - n/2
    Q,          // xi^i p_i
    Del,        // eta_{ij} xi^i d/dp_j (Koszul differential)
    DelStar,    // eta^{ij} p_i d/dxi^j (Koszul codifferential)
    QStar,      // d/dxi^i d/dp_i
    D,          // d/dx^i d/dp_i (divergence)
    G,          // eta^{ij} p_i d/dx^j (gradient)
    L,          // eta^{ij} d/dx^i d/dx^j (Laplacian)
    DeRham,     // xi^i d/dx^i
    DeRhamStar  // eta^{ij} d/dxi^i d/dx^j
};

/// All 13 generators in the canonical table order.
inline constexpr Gen kAllGens[] = {Gen::R,     Gen::E,     Gen::T, Gen::Sigma, Gen::Del,
                                   Gen::DelStar, Gen::Q,   Gen::QStar, Gen::D, Gen::G,
                                   Gen::L,     Gen::DeRham, Gen::DeRhamStar};

std::string gen_name(Gen g);

PolyOp invariant_generator(Gen g, const Chart& ch);

/// Euler operators without the n/2 shifts.
PolyOp euler_even(const Chart& ch);  // p_i d/dp_i
PolyOp euler_odd(const Chart& ch);   // xi^i d/dxi^i

/// Index helpers for the diagonal metric.
PolyOp mul_x_lower(const Chart& ch, int i);   // x_i = eta_{ii} x^i
PolyOp mul_xi_lower(const Chart& ch, int i);  // xi_i
PolyOp d_p_upper(const Chart& ch, int i);     // d/dp^i = eta_{ii} d/dp_i
PolyOp d_xi_upper(const Chart& ch, int i);    // d/dxi_i = eta^{ii} d/dxi^i
PolyOp mul_p_upper(const Chart& ch, int i);   // p^i

/// Conformal Lie algebra generator of the flat model.
struct ConfGen {
    enum Kind { Translation, Rotation, Dilation, Inversion } kind;
    int i = 0, j = 0;  // Rotation uses (i, j) with i < j

    std::string name() const;
};

/// All (n+1)(n+2)/2 generators in a fixed order.
std::vector<ConfGen> conformal_basis(const Chart& ch);

/// Polynomial vector field X^k(x) d/dx^k.
struct VecField {
    Chart chart;
    std::vector<SuperPoly> comp;  // n components, polynomials in x only

    VecField() = default;
    explicit VecField(const Chart& ch);
};

VecField vector_field(const ConfGen& g, const Chart& ch);
VecField vf_bracket(const VecField& a, const VecField& b);

/// Coordinates of a degree <= 2 conformal vector field in the basis
/// returned by conformal_basis; throws if outside the span.
std::vector<Rat> decompose_in_conformal_basis(const VecField& v);

}  // namespace superquant
