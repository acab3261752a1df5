#pragma once

#include "superquant/super_poly.hpp"

#include <map>

namespace superquant {

/// One normal-ordered operator word: multiplications x^a p^b xi^S to the
/// left of derivatives dx^c dp^d dxi^T. Both odd words are stored as masks
/// and read in increasing index order.
struct OpMono {
    ExpVec x{}, p{}, dx{}, dp{};
    uint32_t xi = 0, dxi = 0;

    auto key() const { return std::make_tuple(xi, dxi, p, dp, x, dx); }
    bool operator<(const OpMono& o) const { return key() < o.key(); }
    bool operator==(const OpMono& o) const {
        return xi == o.xi && dxi == o.dxi && x == o.x && p == o.p && dx == o.dx && dp == o.dp;
    }
    int parity() const { return (popcount_mask(xi) + popcount_mask(dxi)) % 2; }
};

/// Differential operator on SuperPoly in canonical normal order; the form
/// is unique, so operator identities are syntactic equalities.
class PolyOp {
  public:
    PolyOp() = default;
    explicit PolyOp(Chart chart) : chart_(chart) {}

    static PolyOp identity(Chart chart);
    static PolyOp zero(Chart chart) { return PolyOp(chart); }
    static PolyOp mul(const SuperPoly& f);  // multiplication operator
    static PolyOp term(Chart chart, const OpMono& m, Scalar c);
    static PolyOp d_x(Chart chart, int i);
    static PolyOp d_p(Chart chart, int i);
    static PolyOp d_xi(Chart chart, int i);

    const Chart& chart() const { return chart_; }
    const std::map<OpMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    void add_term(const OpMono& m, const Scalar& c);

    PolyOp operator-() const;
    PolyOp operator+(const PolyOp& o) const;
    PolyOp operator-(const PolyOp& o) const;
    PolyOp operator*(const Scalar& c) const;
    PolyOp& operator+=(const PolyOp& o);
    PolyOp& operator-=(const PolyOp& o);
    bool operator==(const PolyOp& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }
    bool operator!=(const PolyOp& o) const { return !(*this == o); }

    /// -1 if mixed parity, else 0 or 1 (zero operator reports 0).
    int parity() const;

    SuperPoly apply(const SuperPoly& f) const;
    std::string str() const;

  private:
    Chart chart_;
    std::map<OpMono, Scalar> terms_;
};

inline PolyOp operator*(const Scalar& c, const PolyOp& a) { return a * c; }

/// Operator composition with normal reordering (super-Leibniz):
/// apply(compose(A,B), f) == apply(A, apply(B, f)).
PolyOp compose(const PolyOp& a, const PolyOp& b);
PolyOp compose(const PolyOp& a, const PolyOp& b, const PolyOp& c);

/// [A,B] = A B - (-1)^{|A||B|} B A; requires parity-homogeneous inputs.
PolyOp supercommutator(const PolyOp& a, const PolyOp& b);

}  // namespace superquant
