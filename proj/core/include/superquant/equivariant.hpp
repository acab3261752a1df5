#pragma once

#include "superquant/spinor_operator.hpp"
#include "superquant/tables.hpp"

namespace superquant {

/// Structured failure for weights where the equivariant map does not
/// exist; names the obstructing invariant operator so the tables can be
/// tested as error behavior.
struct CriticalWeightError : Error {
    CriticalWeightError(const Rat& d, std::string op, std::string component_)
        : Error("critical weight " + d.get_str() + " on " + component_ + " (invariant operator " +
                op + ")"),
          delta(d),
          invariant_op(std::move(op)),
          component(std::move(component_)) {}
    Rat delta;
    std::string invariant_op;
    std::string component;
};

struct CriticalWeightInfo {
    Rat delta;
    std::string invariant_op;
    std::optional<Rat> rescue_lambda;  // quantization rows only
};

/// Critical weights of the componentwise superization on one label.
std::vector<CriticalWeightInfo> superization_critical_weights(const Label& l, const Chart& ch);

/// Critical weights of the degree-one quantization with source component
/// (1, kappa, 0; alpha beta).
std::vector<CriticalWeightInfo> quantization_critical_weights(int kappa, int alpha, int beta,
                                                              const Chart& ch);

/// Componentwise conformally equivariant superization on a decomposed
/// piece lying in the component with the given label.
SuperPoly superize_component(const SuperPoly& p, const Label& l, const Rat& delta, Harmonic& h);

/// Global-formula superization of an arbitrary tensor symbol. Agrees with
/// the componentwise map on every non-critical component.
SuperPoly superize_global(const SuperPoly& p, const Rat& delta, Harmonic& h);

/// The symbol-level quantization correction (identity plus the four
/// degree-lowering terms); exposed separately so the defining equivariance
/// identity can be checked at the operator level.
SuperPoly quantize_correct_symbol(const SuperPoly& p, const Rat& lambda, const Rat& mu,
                                  const Chart& ch);

/// Conformally equivariant quantization on symbols of p-degree <= 1.
SpinorOp quantize_deg1(const SuperPoly& p, const Rat& lambda, const Rat& mu,
                       const CliffordRep& rep);

/// Verifies, for every critical row of both tables, that the named
/// operator commutes with all inversion actions on the stated component
/// and that the map constructor raises the structured error.
TableReport verify_critical_rows(const Chart& ch);

/// One classified invariant operator family on seed components.
struct InvariantDescriptor {
    enum Family { DPow, GPow, LSeries, SmallD, SmallDStar } family;
    int power = 1;  // d, g or l
    std::string name() const;
};

struct InvarianceReport {
    bool solvable = true;     // for LSeries: coefficient system solvable
    bool invariant = false;   // commutes with all inversion actions
    std::vector<Rat> coefficients;  // solved a-coefficients for LSeries
    std::string detail;
};

/// Builds the operator (solving the series coefficients when needed) and
/// checks conformal invariance on the seed component (k,kappa,0;00) at the
/// given weight.
InvarianceReport check_invariant_operator(const InvariantDescriptor& d, const Rat& delta,
                                          int k, int kappa, Harmonic& h);

/// The weight at which the family is invariant on (k,kappa,0;00).
Rat invariant_weight(const InvariantDescriptor& d, int k, int kappa, const Chart& ch);

}  // namespace superquant
