#pragma once

#include "superquant/equivariant.hpp"

namespace superquant {

struct KillingSolveRequest {
    int k = 1, kappa = 0;
    int deg_max = 3;  // x-degree bound of the polynomial ansatz
    Chart chart;
};

/// The flat projected-gradient expansion on the seed space at (k, kappa):
/// G - (1/(E+Sigma)) del* d - (1/(n+E-Sigma)) Q d* - (1/(n+2E-4)) R D,
/// with the grading scalars evaluated on the output of each word. On seeds
/// it equals the seed projection of G.
PolyOp ck_operator(int k, int kappa, const Chart& ch);

/// The conformal Killing condition map on hook tensors: the (0;01)
/// projection of the gradient.
SuperPoly ck_apply(const SuperPoly& hook, Harmonic& h);

struct KillingBasis {
    std::vector<SuperPoly> basis;
    int deg_max = 0;
    bool closed = false;  // raising deg_max by one did not enlarge the space
};

/// Exact basis of conformal Killing hook tensors in the (k,kappa,0;01)
/// component with polynomial coefficients of x-degree <= deg_max; also
/// reports whether the solution space is closed under raising the bound.
KillingBasis solve_conformal_killing(const KillingSolveRequest& req, Harmonic& h);

/// Exact basis of conformal Killing kappa-forms (their del*-images are the
/// (1, kappa-1, 0; 01) hook tensors).
KillingBasis solve_conformal_killing_forms(int kappa, int deg_max, Harmonic& h);

struct SuperchargeDecision {
    bool member = false;
    SuperPoly bracket;  // {Q, S^0(K)}
    IdealWitness witness;
};

/// Whether the superized tensor is a conformal supercharge:
/// {Q, S^0(K)} must lie in the ideal (Q, R).
SuperchargeDecision is_supercharge(const SuperPoly& k_tensor, Harmonic& h);

/// Verifies {Q, S^0(K)} = S^{1/n}(A K) mod (Q,R) with
/// A = -(i/hbar) del* + Pi01 G del, on a spanning set of
/// ker Q* cap ker T up to the given bidegree.
TableReport lemma_a_check(Harmonic& h, int k_max, int kappa_max, int x_deg);

struct SymmetryRecord {
    SuperPoly killing_form;     // conformal Killing (kappa+1)-form
    SuperPoly hook;             // del* of it
    SuperPoly supercharge;      // S^0(hook)
    SpinorOp d1;                // first-order symmetry
    SpinorOp d2;                // partner with dirac d1 = d2 dirac
    bool paths_agree = false;   // closed formula == quantized pipeline
    bool partner_exact = false; // zero residual for d2
};

/// Builds the first-order symmetry from a conformal Killing form two ways
/// (closed formula and quantization of the superized hook tensor) and
/// finds the partner; disagreement between the paths throws.
SymmetryRecord first_order_dirac_symmetry(const SuperPoly& killing_form, Harmonic& h,
                                          const CliffordRep& rep);

/// S^delta((Q,R)) stays in (Q,R) for delta in {0, 1/n}; on p-degree <= 1
/// representatives the quantization maps the ideal into the Dirac left
/// ideal. Verified on spanning sets up to the given bidegree.
TableReport ideal_stability_check(const Rat& delta, Harmonic& h, const CliffordRep& rep,
                                  int k_max, int kappa_max);

}  // namespace superquant
