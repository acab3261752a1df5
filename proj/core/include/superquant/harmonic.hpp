#pragma once

#include "superquant/actions.hpp"
#include "superquant/linalg.hpp"

#include <functional>
#include <map>

namespace superquant {

struct DegenerateDenominatorError : Error {
    using Error::Error;
};

/// Label of one irreducible fiber component: p-degree k, xi-degree kappa,
/// trace level s, and the two raising flags. The underlying seed space is
/// ker T cap ker del cap ker Q* at bidegree (k - 2s - alpha - beta,
/// kappa - alpha + beta); the component is R^s Q0^alpha del*^beta (seed).
struct Label {
    int k = 0, kappa = 0, s = 0, alpha = 0, beta = 0;

    auto key() const { return std::make_tuple(k, kappa, s, alpha, beta); }
    bool operator<(const Label& o) const { return key() < o.key(); }
    bool operator==(const Label& o) const { return key() == o.key(); }
    int seed_k() const { return k - 2 * s - alpha - beta; }
    int seed_kappa() const { return kappa - alpha + beta; }
    std::string str() const;
};

/// Per-chart cache of the fiberwise harmonic machinery.
class Harmonic {
  public:
    explicit Harmonic(const Chart& ch);

    struct BidegreeData {
        std::vector<Mono> basis;  // fiber basis of V_{k,kappa}
        std::vector<Label> labels;
        std::vector<std::pair<size_t, size_t>> col_range;  // per label
        ScalarMat change;                                  // columns = component vectors
        ScalarMat change_inv;
        // sparse view of the change columns for fast re-assembly
        std::vector<std::vector<std::pair<size_t, Scalar>>> cols;
    };

    const Chart& chart() const { return chart_; }
    const BidegreeData& bidegree(int k, int kappa);

    /// Basis of the seed space at (k, kappa) as fiber polynomials.
    std::vector<SuperPoly> seed_basis(int k, int kappa);

    /// Basis of one component as fiber polynomials.
    std::vector<SuperPoly> component_basis(const Label& l);

    bool realizable(const Label& l);

    /// Full decomposition; x-coefficients ride along the fiber split.
    std::map<Label, SuperPoly> decompose(const SuperPoly& f);

    /// Projection onto ker T along R ker T^... : Id - (1/(4n+2E)) R T,
    /// valid on ker T^2 only (throws otherwise).
    SuperPoly pi0(const SuperPoly& f);

    /// Q0 = pi0 of (Q f); f must lie in ker T bidegree-wise.
    SuperPoly q0(const SuperPoly& f);

    /// Projection onto the sum of the (k,kappa,0;00) components.
    SuperPoly project_seed(const SuperPoly& f);
    /// Projection onto the sum of the (k,kappa,0;01) components.
    SuperPoly project_01(const SuperPoly& f);
    /// Restrict-corestrict an operator to seeds: project_seed(op(project_seed(f))).
    SuperPoly bold0(const PolyOp& op, const SuperPoly& f);

  private:
    Chart chart_;
    std::map<std::pair<int, int>, BidegreeData> cache_;
    PolyOp op_T_, op_del_, op_qstar_, op_q_, op_delstar_, op_R_;
};

/// Names for the fiberwise projections exposed per bidegree context.
enum class ProjName { DeltaPair, DeltaPairComplement, QPair, QPairComplement, Pi0, PiBold0, Pi01 };

/// The projection as a concrete operator valid on the (k, kappa) fiber
/// component (PiBold0/Pi01 are matrix-encoded there). Throws
/// DegenerateDenominatorError when the scalar denominator vanishes.
PolyOp projection_op(ProjName name, int k, int kappa, Harmonic& h);

enum class CasimirKind { Tensorial, Hamiltonian, Quantum };

/// Closed-form Casimir operators on tensor symbols (quantum one needs both
/// weights; the others ignore lambda).
PolyOp casimir(CasimirKind kind, const Chart& ch, const Rat& delta, const Rat& lambda = Rat(0));

/// The same operators rebuilt from the defining quadratic sum over the
/// conformal basis; used as an independent oracle for the closed forms.
PolyOp casimir_defining_sum(const std::function<PolyOp(const ConfGen&)>& rho, const Chart& ch);

/// Tensorial Casimir eigenvalue on the component with the given label.
Rat casimir_eigenvalue(const Label& l, const Chart& ch, const Rat& delta);

struct IsoPair {
    Label source, target;
    std::string forward, backward;  // operator descriptions
    Rat roundtrip_scalar;           // backward(forward(v)) = scalar * v
};

/// The component isomorphisms with the given source label; verifies the
/// round trip on a basis and reports the scalar.
std::vector<IsoPair> component_isomorphisms(const Label& l, Harmonic& h);

}  // namespace superquant
