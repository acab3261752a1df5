#pragma once

#include "superquant/clifford.hpp"
#include "superquant/generators.hpp"
#include "superquant/super_poly.hpp"

#include <map>
#include <optional>

namespace superquant {

/// Matrix-valued differential operator in x, normal ordered (x-powers to
/// the left of x-derivatives), with constant spinor matrices as
/// coefficients of each (x^a, d^c) word.
class SpinorOp {
  public:
    SpinorOp() = default;
    SpinorOp(Chart chart, size_t dim) : chart_(chart), dim_(dim) {}

    static SpinorOp identity(const CliffordRep& rep);
    static SpinorOp zero(const CliffordRep& rep) {
        return SpinorOp(rep.chart(), rep.dim());
    }

    const Chart& chart() const { return chart_; }
    size_t dim() const { return dim_; }
    const std::map<std::pair<ExpVec, ExpVec>, SpinMat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& x, const ExpVec& dx, const SpinMat& m);

    SpinorOp operator-() const;
    SpinorOp operator+(const SpinorOp& o) const;
    SpinorOp operator-(const SpinorOp& o) const;
    SpinorOp operator*(const Scalar& c) const;
    bool operator==(const SpinorOp& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

    int max_x_degree() const;
    int derivative_order() const;

    std::string str() const;

  private:
    Chart chart_;
    size_t dim_ = 0;
    std::map<std::pair<ExpVec, ExpVec>, SpinMat> terms_;
};

SpinorOp compose(const SpinorOp& a, const SpinorOp& b);

/// Hamiltonian order: derivatives weigh 2, Clifford factors weigh 1.
int hamiltonian_order(const SpinorOp& a, const CliffordRep& rep);

/// Normal ordering map: x-coefficients pass through,
/// xi^S p^b -> (gamma^S / sqrt2^{|S|}) (hbar/i)^{|b|} d^b.
SpinorOp normal_order(const SuperPoly& p, const CliffordRep& rep);

/// Principal Hamiltonian symbol at level ell, with the unit scales
/// sigma(gamma^S d^c) = xi^S p^c; throws when the order exceeds ell.
/// With these scales sigma(normal_order(f)) = (hbar/i)^k (sqrt2/2)^kappa f
/// on bidegree (k, kappa).
SuperPoly hamiltonian_symbol(const SpinorOp& a, int ell, const CliffordRep& rep);
/// The recorded per-bidegree constant of sigma o normal_order.
Scalar symbol_roundtrip_scale(int k, int kappa);

/// Flat Dirac operator gamma^i d_i.
SpinorOp dirac(const CliffordRep& rep);

/// Formal adjoint for Euclidean signature: d_i -> -d_i, matrices by
/// conjugate-transpose in the chirality pairing, which makes
/// (gamma^i)^t = +gamma^i. Throws on indefinite charts.
SpinorOp adjoint(const SpinorOp& a, const CliffordRep& rep);

/// Kosmann Lie derivative of weighted spinors along a conformal generator:
/// X^i d_i + (1/4)(d_i X_j - d_j X_i) gamma^i gamma^j + lambda div X.
SpinorOp kosmann_lie_derivative(const ConfGen& g, const Rat& lambda, const CliffordRep& rep);

struct RightDivision {
    enum Verdict { Exact, Refuted, InconclusiveAtBound } verdict;
    SpinorOp quotient;   // a = quotient o dirac + remainder
    SpinorOp remainder;  // zero iff membership in the left ideal
};

/// Exact division of a by the Dirac operator from the right. The default
/// bounds (quotient order = order(a) - 1, x-degree <= x-degree(a) + 2) are
/// never binding for the algorithm, so with them the verdict is exact.
RightDivision right_divide(const SpinorOp& a, const CliffordRep& rep, int max_order = -1,
                           int max_xdeg = -1);

/// Searches d2 with dirac o d1 = d2 o dirac; nullopt when refuted or the
/// bounds cut the search (verdict via right_divide on dirac o d1).
std::optional<SpinorOp> higher_symmetry_partner(const SpinorOp& d1, const CliffordRep& rep);

}  // namespace superquant
