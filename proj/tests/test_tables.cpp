#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superquant/tables.hpp"

using namespace superquant;

namespace {
void expect_all_pass(const TableReport& rep) {
    for (const auto& c : rep.cells) {
        INFO(rep.table, " cell ", c.cell, " residual ", c.residual);
        CHECK(c.pass);
    }
    CHECK(rep.cells.size() > 0);
}
}  // namespace

TEST_CASE("thirteen-generator supercommutator table") {
    for (const Chart& ch : {Chart::euclidean(2), Chart::euclidean(4), Chart::lorentzian(4)}) {
        TableReport rep = verify_table(TableKind::CommRel13, ch);
        CHECK(rep.cells.size() == 169);
        expect_all_pass(rep);
    }
}

TEST_CASE("selected commutator cells") {
    Chart ch = Chart::euclidean(4);
    PolyOp lhs = supercommutator(invariant_generator(Gen::DelStar, ch),
                                 invariant_generator(Gen::Del, ch));
    CHECK(lhs == invariant_generator(Gen::E, ch) + invariant_generator(Gen::Sigma, ch));
    PolyOp lhs2 = supercommutator(invariant_generator(Gen::Q, ch),
                                  invariant_generator(Gen::QStar, ch));
    CHECK(lhs2 == invariant_generator(Gen::E, ch) - invariant_generator(Gen::Sigma, ch));
    PolyOp lhs3 = supercommutator(invariant_generator(Gen::R, ch),
                                  invariant_generator(Gen::T, ch));
    CHECK(lhs3 == invariant_generator(Gen::E, ch) * Scalar(-4));
    PolyOp lhs4 = supercommutator(invariant_generator(Gen::DeRham, ch),
                                  invariant_generator(Gen::DelStar, ch));
    CHECK(lhs4 == invariant_generator(Gen::G, ch));
}

TEST_CASE("expected table satisfies super antisymmetry") {
    // Independent sanity check of the frozen data.
    Chart ch = Chart::euclidean(4);
    auto parity = [](Gen g) {
        return g == Gen::Q || g == Gen::Del || g == Gen::DelStar || g == Gen::QStar ||
                       g == Gen::DeRham || g == Gen::DeRhamStar
                   ? 1
                   : 0;
    };
    for (Gen a : kAllGens)
        for (Gen b : kAllGens) {
            PolyOp ab = expected_commutator(a, b, ch);
            PolyOp ba = expected_commutator(b, a, ch);
            if (parity(a) == 1 && parity(b) == 1)
                CHECK(ab == ba);
            else
                CHECK(ab == -ba);
        }
}

TEST_CASE("kernel-of-T commutator table") {
    expect_all_pass(verify_table(TableKind::KerTTable, Chart::euclidean(4)));
}

TEST_CASE("inversion commutators") {
    expect_all_pass(verify_table(TableKind::InversionCommutators, Chart::euclidean(4)));
    expect_all_pass(verify_table(TableKind::InversionCommutators, Chart::lorentzian(4)));
}

TEST_CASE("inversion action on generator powers") {
    expect_all_pass(verify_table(TableKind::PowersTable, Chart::euclidean(4)));
}

TEST_CASE("weight shift table") {
    for (const Chart& ch : {Chart::euclidean(4), Chart::lorentzian(4)}) {
        expect_all_pass(verify_table(TableKind::WeightTable, ch));
    }
}

TEST_CASE("abelian conformal-invariant subalgebra") {
    // E commutes with all seven fiberwise conformal invariants; E, Sigma,
    // RT and QQ* + del*del pairwise commute; the three mixed commutators
    // agree up to the stated factors.
    Chart ch = Chart::euclidean(4);
    PolyOp ee = euler_even(ch);
    PolyOp so = euler_odd(ch);
    PolyOp rt = compose(invariant_generator(Gen::R, ch), invariant_generator(Gen::T, ch));
    PolyOp qqs = compose(invariant_generator(Gen::Q, ch), invariant_generator(Gen::QStar, ch));
    PolyOp dsd =
        compose(invariant_generator(Gen::DelStar, ch), invariant_generator(Gen::Del, ch));
    PolyOp qdel = compose(invariant_generator(Gen::Q, ch), invariant_generator(Gen::Del, ch));
    PolyOp dsqs =
        compose(invariant_generator(Gen::DelStar, ch), invariant_generator(Gen::QStar, ch));

    auto comm = [](const PolyOp& a, const PolyOp& b) { return compose(a, b) - compose(b, a); };
    for (const PolyOp* inv : {&so, &rt, &qqs, &dsd, &qdel, &dsqs})
        CHECK(comm(ee, *inv).is_zero());
    PolyOp four = qqs + dsd;
    CHECK(comm(so, rt).is_zero());
    CHECK(comm(so, four).is_zero());
    CHECK(comm(rt, four).is_zero());

    PolyOp half_rt_qqs = comm(rt, qqs) * Scalar(Rat(1, 2));
    PolyOp mhalf_rt_dsd = comm(rt, dsd) * Scalar(Rat(-1, 2));
    PolyOp qqs_dsd = comm(qqs, dsd);
    CHECK(half_rt_qqs == mhalf_rt_dsd);
    CHECK(half_rt_qqs == qqs_dsd);

    // and the common value is R del Q* - Q del* T
    PolyOp rhs = compose(invariant_generator(Gen::R, ch), invariant_generator(Gen::Del, ch),
                         invariant_generator(Gen::QStar, ch)) -
                 compose(invariant_generator(Gen::Q, ch), invariant_generator(Gen::DelStar, ch),
                         invariant_generator(Gen::T, ch));
    CHECK(half_rt_qqs == rhs);
}
