#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superquant/harmonic.hpp"

using namespace superquant;

namespace {
const Chart ch = Chart::euclidean(4);

SuperPoly sum_parts(const std::map<Label, SuperPoly>& parts, const Chart& c) {
    SuperPoly s(c);
    for (const auto& [l, v] : parts) s += v;
    return s;
}
}  // namespace

TEST_CASE("decomposition is complete with zero residual") {
    Harmonic h(ch);
    for (int k = 0; k <= 3; ++k) {
        for (int kappa = 0; kappa <= ch.n; ++kappa) {
            for (const Mono& m : fiber_basis(ch, k, kappa)) {
                SuperPoly f = SuperPoly::monomial(ch, m, Scalar::one());
                auto parts = h.decompose(f);
                CHECK(sum_parts(parts, ch) == f);
            }
        }
    }
}

TEST_CASE("x coefficients ride along the fiber decomposition") {
    Harmonic h(ch);
    SuperPoly f = SuperPoly::x(ch, 0) * SuperPoly::p(ch, 1) * SuperPoly::xi(ch, 2) +
                  SuperPoly::momentum_square(ch) * SuperPoly::x(ch, 3);
    auto parts = h.decompose(f);
    CHECK(sum_parts(parts, ch) == f);
}

TEST_CASE("seeds are annihilated by T, del and Q*") {
    Harmonic h(ch);
    PolyOp t = invariant_generator(Gen::T, ch);
    PolyOp del = invariant_generator(Gen::Del, ch);
    PolyOp qs = invariant_generator(Gen::QStar, ch);
    for (int k = 0; k <= 3; ++k)
        for (int kappa = 0; kappa <= ch.n; ++kappa)
            for (const auto& w : h.seed_basis(k, kappa)) {
                CHECK(t.apply(w).is_zero());
                CHECK(del.apply(w).is_zero());
                CHECK(qs.apply(w).is_zero());
            }
}

TEST_CASE("known component labels") {
    Harmonic h(ch);
    auto single_label = [&](const SuperPoly& f) {
        auto parts = h.decompose(f);
        REQUIRE(parts.size() == 1);
        return parts.begin()->first;
    };
    CHECK(single_label(SuperPoly::xi(ch, 0)) == Label{0, 1, 0, 0, 0});
    CHECK(single_label(SuperPoly::charge(ch)) == Label{1, 1, 0, 1, 0});
    CHECK(single_label(SuperPoly::momentum_square(ch)) == Label{2, 0, 1, 0, 0});
    CHECK(single_label(SuperPoly::p(ch, 0)) == Label{1, 0, 0, 0, 1});
}

TEST_CASE("eigenvalue formula matches the operator spectrum") {
    Harmonic h(ch);
    for (Rat delta : {Rat(0), Rat(1, 3)}) {
        PolyOp ct = casimir(CasimirKind::Tensorial, ch, delta);
        for (int k = 0; k <= 2; ++k)
            for (int kappa = 0; kappa <= ch.n; ++kappa)
                for (const Mono& m : fiber_basis(ch, k, kappa)) {
                    auto parts = h.decompose(SuperPoly::monomial(ch, m, Scalar::one()));
                    for (const auto& [l, comp] : parts) {
                        Rat ev = casimir_eigenvalue(l, ch, delta);
                        CHECK(ct.apply(comp) == comp * Scalar(ev));
                    }
                }
    }
}

TEST_CASE("closed Casimir forms equal the defining quadratic sums") {
    Rat delta(1, 3);
    PolyOp lhs = casimir_defining_sum(
        [&](const ConfGen& g) { return conformal_action_T(g, delta, ch); }, ch);
    CHECK(lhs == casimir(CasimirKind::Tensorial, ch, delta));
    PolyOp lhs2 = casimir_defining_sum(
        [&](const ConfGen& g) { return hamiltonian_action(g, delta, ch); }, ch);
    CHECK(lhs2 == casimir(CasimirKind::Hamiltonian, ch, delta));
    Rat lam(3, 8), mu = lam + delta;
    PolyOp lhs3 = casimir_defining_sum(
        [&](const ConfGen& g) { return quantum_action(g, lam, mu, ch); }, ch);
    CHECK(lhs3 == casimir(CasimirKind::Quantum, ch, delta, lam));

    // the hamiltonian and tensorial Casimirs differ by 2 (hbar/i) d del
    PolyOp d_del =
        compose(invariant_generator(Gen::DeRham, ch), invariant_generator(Gen::Del, ch));
    CHECK(lhs2 - lhs == d_del * (Scalar(2) * Scalar::hbar_over_i()));
}

TEST_CASE("tensorial Casimir kills constants at delta zero") {
    PolyOp ct = casimir(CasimirKind::Tensorial, ch, Rat(0));
    CHECK(ct.apply(SuperPoly::constant(ch, Scalar::one())).is_zero());
}

TEST_CASE("pair projections") {
    Harmonic h(ch);
    SuperPoly xi0 = SuperPoly::xi(ch, 0);
    // xi^1 lies in ker del, so the del-pair projector fixes it and the
    // complement kills it
    PolyOp pd = projection_op(ProjName::DeltaPair, 0, 1, h);
    PolyOp pdc = projection_op(ProjName::DeltaPairComplement, 0, 1, h);
    CHECK(pd.apply(xi0) == xi0);
    CHECK(pdc.apply(xi0).is_zero());

    SuperPoly p0 = SuperPoly::p(ch, 0);
    PolyOp qp = projection_op(ProjName::QPair, 1, 0, h);
    PolyOp qpc = projection_op(ProjName::QPairComplement, 1, 0, h);
    CHECK(qp.apply(p0) + qpc.apply(p0) == p0);

    // idempotence on a whole bidegree
    for (auto name : {ProjName::DeltaPair, ProjName::QPair}) {
        PolyOp pr = projection_op(name, 2, 1, h);
        for (const Mono& m : fiber_basis(ch, 2, 1)) {
            SuperPoly v = SuperPoly::monomial(ch, m, Scalar::one());
            CHECK(pr.apply(pr.apply(v)) == pr.apply(v));
        }
    }

    CHECK_THROWS_AS(projection_op(ProjName::DeltaPair, 0, 0, h), DegenerateDenominatorError);
    CHECK_THROWS_AS(projection_op(ProjName::QPair, 0, ch.n, h), DegenerateDenominatorError);
}

TEST_CASE("matrix-encoded seed projector agrees with the decomposition") {
    Harmonic h(ch);
    for (auto [k, kappa] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{2, 2}}) {
        PolyOp pb = projection_op(ProjName::PiBold0, k, kappa, h);
        PolyOp p01 = projection_op(ProjName::Pi01, k, kappa, h);
        for (const Mono& m : fiber_basis(ch, k, kappa)) {
            SuperPoly v = SuperPoly::monomial(ch, m, Scalar::one());
            CHECK(pb.apply(v) == h.project_seed(v));
            CHECK(p01.apply(v) == h.project_01(v));
        }
    }
    // traceless p1 p2 sits entirely in the 01 part at kappa = 0
    SuperPoly f = SuperPoly::p(ch, 0) * SuperPoly::p(ch, 1);
    CHECK(h.project_seed(f).is_zero());
    CHECK(h.project_01(f) == f);
}

TEST_CASE("pair projections restricted to ker T match the seed projector") {
    Harmonic h(ch);
    int k = 1, kappa = 2;
    PolyOp pd = projection_op(ProjName::DeltaPair, k, kappa, h);
    for (const auto& w : h.seed_basis(k, kappa)) CHECK(pd.apply(w) == w);
    PolyOp delstar = invariant_generator(Gen::DelStar, ch);
    for (const auto& w : h.seed_basis(k - 1, kappa + 1)) {
        SuperPoly v = delstar.apply(w);
        CHECK(pd.apply(v).is_zero());
    }
    PolyOp qp = projection_op(ProjName::QPair, k, kappa, h);
    for (const auto& w : h.seed_basis(k, kappa)) CHECK(qp.apply(w) == w);
}

TEST_CASE("component isomorphisms round trip with one scalar") {
    Harmonic h(ch);
    SUBCASE("alpha=1 source maps down two xi degrees") {
        Label src{1, 2, 0, 1, 0};
        REQUIRE(h.realizable(src));
        auto pairs = component_isomorphisms(src, h);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].target == Label{1, 0, 0, 0, 1});
        CHECK(pairs[0].roundtrip_scalar != 0);
    }
    SUBCASE("invalid target when kappa-2 < 0") {
        Label src{1, 1, 0, 1, 0};
        CHECK_THROWS_AS(component_isomorphisms(src, h), Error);
    }
    SUBCASE("kappa=n alpha=1 source") {
        Label src{1, ch.n, 0, 1, 0};
        REQUIRE(h.realizable(src));
        auto pairs = component_isomorphisms(src, h);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].target == Label{1, ch.n - 2, 0, 0, 1});
    }
    SUBCASE("trace tower source") {
        Label src{3, 1, 1, 0, 0};
        REQUIRE(h.realizable(src));
        auto pairs = component_isomorphisms(src, h);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].target == Label{3, 1, 0, 1, 1});
        CHECK(pairs[0].roundtrip_scalar != 0);
    }
}

TEST_CASE("lorentzian decomposition also closes") {
    Chart chl = Chart::lorentzian(4);
    Harmonic h(chl);
    for (int k = 0; k <= 2; ++k)
        for (int kappa = 0; kappa <= chl.n; ++kappa)
            for (const Mono& m : fiber_basis(chl, k, kappa)) {
                SuperPoly f = SuperPoly::monomial(chl, m, Scalar::one());
                CHECK(sum_parts(h.decompose(f), chl) == f);
            }
}
