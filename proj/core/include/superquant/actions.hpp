#pragma once

#include "superquant/generators.hpp"

namespace superquant {

/// Tensorial action of a conformal generator at weight delta, built from
/// the canonical lift plus the density term:
///   X^i d/dx^i + (d_i X^j)(xi^i d/dxi^j - p_j d/dp_i) + (div X)(delta - Sigma/n).
PolyOp conformal_action_T(const ConfGen& g, const Rat& delta, const Chart& ch);

/// Hamiltonian action pulled back to tensor symbols:
///   conformal_action_T - (hbar/2i) xi_k xi^j (d_i d_j X^k) d/dp_i.
PolyOp hamiltonian_action(const ConfGen& g, const Rat& delta, const Chart& ch);

/// Quantum action pulled back to tensor symbols: hamiltonian_action plus
///   (hbar/4i)(d_j d_k X^i)(-2 p_i d/dp_j + chi^j_i) d/dp_k
///   - (hbar/i) lambda (d_j div X) d/dp_j,
/// with chi^j_i = xi^j d/dxi^i - xi_i d/dxi_j + (1/2) d/dxi_j d/dxi^i.
PolyOp quantum_action(const ConfGen& g, const Rat& lambda, const Rat& mu, const Chart& ch);

/// Checks [rho(X), rho(Y)] = rho([X,Y]) for every generator pair; returns
/// the offending pair names, empty when the map is a Lie algebra morphism.
std::vector<std::string> morphism_defects(
    const std::function<PolyOp(const ConfGen&)>& rho, const Chart& ch);

}  // namespace superquant
