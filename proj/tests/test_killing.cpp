#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superquant/killing.hpp"

using namespace superquant;

namespace {
const Chart ch = Chart::euclidean(4);
}

TEST_CASE("projected gradient expansion equals the seed projection of G") {
    Harmonic h(ch);
    PolyOp g = invariant_generator(Gen::G, ch);
    for (auto [k, kappa] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
        PolyOp ck = ck_operator(k, kappa, ch);
        for (const auto& w : h.seed_basis(k, kappa)) {
            SuperPoly v = SuperPoly::x(ch, 1) * w + w;
            CHECK(ck.apply(v) == h.project_seed(g.apply(v)));
        }
    }
}

TEST_CASE("intertwining of the hook and seed gradient projections") {
    // del* (Pi_seed G w) = Pi_01 G (del* w) on seeds
    Harmonic h(ch);
    PolyOp g = invariant_generator(Gen::G, ch);
    PolyOp delstar = invariant_generator(Gen::DelStar, ch);
    for (auto [k, kappa] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 1}}) {
        for (const auto& w : h.seed_basis(k, kappa)) {
            SuperPoly v = SuperPoly::x(ch, 0) * SuperPoly::x(ch, 2) * w;
            CHECK(delstar.apply(h.project_seed(g.apply(v))) == ck_apply(delstar.apply(v), h));
        }
    }
}

TEST_CASE("conformal Killing vectors have dimension 15 and close at degree 2") {
    Harmonic h(ch);
    KillingSolveRequest req;
    req.chart = ch;
    req.k = 1;
    req.kappa = 0;
    req.deg_max = 2;
    auto out = solve_conformal_killing(req, h);
    CHECK(out.basis.size() == 15);
    CHECK(out.closed);
    for (const auto& b : out.basis) {
        CHECK(ck_apply(b, h).is_zero());
        CHECK(b.max_p_degree() == 1);
        CHECK(b.max_xi_degree() == 0);
    }
}

TEST_CASE("symmetric trace conditions on solved kappa=0 tensors") {
    // for symmetric hook tensors kernel membership pairs with
    // {R, K} in (R) and T K = 0
    Harmonic h(ch);
    KillingSolveRequest req;
    req.chart = ch;
    req.k = 2;
    req.kappa = 0;
    req.deg_max = 2;
    auto out = solve_conformal_killing(req, h);
    CHECK(out.basis.size() > 0);
    PolyOp t = invariant_generator(Gen::T, ch);
    SuperPoly r2 = SuperPoly::momentum_square(ch);
    for (const auto& b : out.basis) {
        CHECK(t.apply(b).is_zero());
        SuperPoly br = poisson(r2, b);
        auto w = ideal_member_qr(br);
        CHECK(w.member);
        CHECK((w.a * SuperPoly::charge(ch)).is_zero());
    }
    SuperPoly bad = SuperPoly::x(ch, 0) * SuperPoly::x(ch, 0) * SuperPoly::p(ch, 1) *
                    SuperPoly::p(ch, 1);
    SuperPoly proj = h.project_01(bad.bipart(2, 0));
    if (!proj.is_zero()) CHECK_FALSE(ck_apply(proj, h).is_zero());
}

TEST_CASE("conformal Killing forms solve and satisfy the derivative shape") {
    Harmonic h(ch);
    auto forms = solve_conformal_killing_forms(1, 2, h);
    CHECK(forms.basis.size() == 15);
    CHECK(forms.closed);

    // d_X K = <X, dK>/(kappa+1) + X^flat wedge d*K/(n-kappa+1)
    PolyOp d = invariant_generator(Gen::DeRham, ch);
    PolyOp ds = invariant_generator(Gen::DeRhamStar, ch);
    for (const auto& kf : forms.basis) {
        int kappa = 1;
        SuperPoly dk = d.apply(kf);
        SuperPoly dsk = ds.apply(kf);
        for (int i = 0; i < ch.n; ++i) {
            SuperPoly lhs = kf.dx(i);
            SuperPoly rhs = PolyOp::d_xi(ch, i).apply(dk) * Scalar(frac(1, kappa + 1)) +
                            SuperPoly::xi(ch, i) * Scalar(ch.eta(i)) * dsk *
                                Scalar(frac(1, ch.n - kappa + 1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("supercharge decisions") {
    Harmonic h(ch);
    KillingSolveRequest req;
    req.chart = ch;
    req.k = 1;
    req.kappa = 1;
    req.deg_max = 2;
    auto out = solve_conformal_killing(req, h);
    CHECK(out.basis.size() > 0);
    for (size_t i = 0; i < out.basis.size(); i += 3) {
        auto dec = is_supercharge(out.basis[i], h);
        CHECK(dec.member);
        SuperPoly check = dec.witness.a * SuperPoly::charge(ch) +
                          dec.witness.b * SuperPoly::momentum_square(ch);
        CHECK(check == dec.bracket);
    }
    SuperPoly fq = SuperPoly::x(ch, 0) * SuperPoly::xi(ch, 1) * SuperPoly::charge(ch);
    CHECK(is_supercharge(fq, h).member);
    SuperPoly bad(ch);
    {
        auto comp = h.component_basis(Label{1, 0, 0, 0, 1});
        REQUIRE(!comp.empty());
        bad = SuperPoly::x(ch, 0) * SuperPoly::x(ch, 0) * SuperPoly::x(ch, 1) * comp[0];
    }
    if (!ck_apply(bad, h).is_zero()) CHECK_FALSE(is_supercharge(bad, h).member);
}

TEST_CASE("bracket diagram on low bidegrees") {
    Harmonic h(ch);
    auto rep = lemma_a_check(h, 1, 2, 1);
    for (const auto& c : rep.cells) {
        INFO(c.cell, " ", c.residual);
        CHECK(c.pass);
    }
    CHECK(rep.cells.size() > 4);
}

TEST_CASE("first order symmetries from Killing one-forms") {
    Harmonic h(ch);
    CliffordRep rep(ch);
    SuperPoly k1 = SuperPoly::xi(ch, 0);
    auto rec1 = first_order_dirac_symmetry(k1, h, rep);
    CHECK(rec1.paths_agree);
    CHECK(rec1.partner_exact);
    SuperPoly k2 = SuperPoly::x(ch, 0) * SuperPoly::xi(ch, 1) -
                   SuperPoly::x(ch, 1) * SuperPoly::xi(ch, 0);
    auto rec2 = first_order_dirac_symmetry(k2, h, rep);
    CHECK(rec2.paths_agree);
    CHECK(rec2.partner_exact);
    SpinorOp check = compose(dirac(rep), rec2.d1) - compose(rec2.d2, dirac(rep));
    CHECK(check.is_zero());
}

TEST_CASE("two-form symmetry exercises all three formula terms") {
    Harmonic h(ch);
    CliffordRep rep(ch);
    auto forms = solve_conformal_killing_forms(2, 2, h);
    REQUIRE(forms.basis.size() > 0);
    PolyOp d = invariant_generator(Gen::DeRham, ch);
    PolyOp ds = invariant_generator(Gen::DeRhamStar, ch);
    bool exercised = false;
    size_t done = 0;
    for (const auto& kf : forms.basis) {
        bool full = !d.apply(kf).is_zero() && !ds.apply(kf).is_zero();
        auto rec = first_order_dirac_symmetry(kf, h, rep);
        CHECK(rec.paths_agree);
        CHECK(rec.partner_exact);
        if (full) exercised = true;
        if (exercised && ++done > 4) break;
    }
    CHECK(exercised);
}

TEST_CASE("ideal stability under superization and quantization") {
    Harmonic h(ch);
    CliffordRep rep(ch);
    for (Rat delta : {Rat(0), frac(1, ch.n)}) {
        auto out = ideal_stability_check(delta, h, rep, 1, 2);
        for (const auto& c : out.cells) {
            INFO(c.cell, " ", c.residual);
            CHECK(c.pass);
        }
        CHECK(out.cells.size() > 5);
    }
}
