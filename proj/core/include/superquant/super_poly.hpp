#pragma once

#include "superquant/chart.hpp"

#include <map>
#include <optional>
#include <vector>

namespace superquant {

/// Monomial x^a p^b xi^S. The xi word is stored as a bitmask and always
/// read in increasing index order (the canonical sign convention).
struct Mono {
    ExpVec x{}, p{};
    uint32_t xi = 0;

    auto key() const { return std::make_tuple(xi, p, x); }
    bool operator<(const Mono& o) const { return key() < o.key(); }
    bool operator==(const Mono& o) const { return xi == o.xi && p == o.p && x == o.x; }

    int x_degree() const { return exp_total(x); }
    int p_degree() const { return exp_total(p); }
    int xi_degree() const { return popcount_mask(xi); }
    int parity() const { return xi_degree() % 2; }
};

/// Element of the graded-commutative algebra of fiberwise-polynomial
/// functions on the supercotangent bundle, with Scalar coefficients.
/// Terms with zero coefficient are never stored.
class SuperPoly {
  public:
    SuperPoly() = default;
    explicit SuperPoly(Chart chart) : chart_(chart) {}

    static SuperPoly constant(Chart chart, Scalar c);
    static SuperPoly x(Chart chart, int i);   // coordinate x^i
    static SuperPoly p(Chart chart, int i);   // momentum p_i
    static SuperPoly xi(Chart chart, int i);  // odd coordinate xi^i
    static SuperPoly monomial(Chart chart, const Mono& m, Scalar c);
    /// Q = xi^i p_i
    static SuperPoly charge(Chart chart);
    /// R = eta^{ij} p_i p_j
    static SuperPoly momentum_square(Chart chart);

    const Chart& chart() const { return chart_; }
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Mono& m, const Scalar& c);
    Scalar coeff(const Mono& m) const;

    SuperPoly operator-() const;
    SuperPoly operator+(const SuperPoly& o) const;
    SuperPoly operator-(const SuperPoly& o) const;
    SuperPoly operator*(const SuperPoly& o) const;  // graded-commutative product
    SuperPoly operator*(const Scalar& c) const;
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    bool operator==(const SuperPoly& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

    /// -1 if mixed parity, else 0 or 1. Zero polynomial reports 0.
    int parity() const;
    bool is_parity_homogeneous() const { return parity() >= 0 || is_zero(); }
    /// Even and odd parts.
    SuperPoly even_part() const;
    SuperPoly odd_part() const;

    int max_x_degree() const;
    int max_p_degree() const;
    int max_xi_degree() const;

    SuperPoly dx(int i) const;   // d/dx^i
    SuperPoly dp(int i) const;   // d/dp_i
    SuperPoly dxi(int i) const;  // left derivative d/dxi^i

    /// Antilinear involutive anti-automorphism fixing all coordinates.
    SuperPoly conjugate() const;

    /// Split into (p-degree, xi-degree) bihomogeneous parts; zero parts omitted.
    std::map<std::pair<int, int>, SuperPoly> bigrade() const;
    /// The (k, kappa) part.
    SuperPoly bipart(int k, int kappa) const;
    /// Part of given xi-degree.
    SuperPoly xi_part(int kappa) const;

    std::string str() const;

  private:
    Chart chart_;
    std::map<Mono, Scalar> terms_;
};

inline SuperPoly operator*(const Scalar& c, const SuperPoly& f) { return f * c; }

/// Graded Poisson bracket in flat Darboux coordinates:
///   {F,G} = dF/dx^i dG/dp_i - dF/dp_i dG/dx^i
///           - (i/hbar) (-1)^{|F|} eta^{jk} dF/dxi^j dG/dxi^k,
/// the closed form pinned by {x^i,p_j} = delta^i_j and
/// {xi^j,xi^k} = (i/hbar) eta^{jk} together with graded Jacobi.
SuperPoly poisson(const SuperPoly& f, const SuperPoly& g);

struct IdealWitness {
    bool member = false;
    SuperPoly a, b;  // h = a*Q + b*R when member
};

/// Exact membership in the two-sided ideal generated by Q = xi^i p_i and
/// R = eta^{ij} p_i p_j, decided bidegree-by-bidegree by linear algebra.
IdealWitness ideal_member_qr(const SuperPoly& h);

}  // namespace superquant
