#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superquant/clifford.hpp"

using namespace superquant;

TEST_CASE("clifford relations in all tested charts") {
    for (const Chart& ch : {Chart::euclidean(2), Chart::lorentzian(2), Chart::euclidean(4),
                            Chart::lorentzian(4), Chart::euclidean(6), Chart::lorentzian(6)}) {
        CliffordRep rep(ch);
        CHECK(rep.dim() == (1u << (ch.n / 2)));
        for (int i = 0; i < ch.n; ++i)
            for (int j = 0; j < ch.n; ++j) {
                SpinMat anti = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
                SpinMat want =
                    SpinMat::identity(rep.dim()) *
                    Scalar(i == j ? -2 * ch.eta(i) : 0);
                CHECK(anti == want);
            }
    }
}

TEST_CASE("basis words are independent and square to scalars") {
    Chart ch = Chart::euclidean(4);
    CliffordRep rep(ch);
    // chirality squares to a scalar
    SpinMat chi = rep.chirality();
    SpinMat chi2 = chi * chi;
    Scalar val = chi2.at(0, 0);
    CHECK_FALSE(val.is_zero());
    CHECK(chi2 == SpinMat::identity(rep.dim()) * val);
    // chirality anticommutes with each gamma
    for (int i = 0; i < ch.n; ++i)
        CHECK((chi * rep.gamma(i) + rep.gamma(i) * chi).is_zero());

    // coordinates recover an arbitrary combination exactly
    SpinMat m = rep.gamma_word(0b0101u) * Scalar(3) + rep.gamma_word(0b0011u) * Scalar::i() +
                SpinMat::identity(rep.dim()) * Scalar(Rat(-7, 2));
    auto coords = rep.clifford_coordinates(m);
    for (uint32_t mask = 0; mask < coords.size(); ++mask) {
        if (mask == 0b0101u) CHECK(coords[mask] == Scalar(3));
        else if (mask == 0b0011u) CHECK(coords[mask] == Scalar::i());
        else if (mask == 0) CHECK(coords[mask] == Scalar(Rat(-7, 2)));
        else CHECK(coords[mask].is_zero());
    }
}

TEST_CASE("gamma entries stay in the small coefficient set") {
    CliffordRep rep(Chart::lorentzian(4));
    for (int i = 0; i < 4; ++i)
        for (size_t r = 0; r < rep.dim(); ++r)
            for (size_t c = 0; c < rep.dim(); ++c) {
                Scalar v = rep.gamma(i).at(r, c);
                bool small = v.is_zero() || v == Scalar(1) || v == Scalar(-1) ||
                             v == Scalar::i() || v == -Scalar::i();
                CHECK(small);
            }
}

TEST_CASE("odd dimension is rejected") { CHECK_THROWS_AS(Chart(2, 1), Error); }
