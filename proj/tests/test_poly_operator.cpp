#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sampling.hpp"
#include "superquant/generators.hpp"
#include "superquant/poly_operator.hpp"

#include <random>

using namespace superquant;
using superquant::testing::Sampler;

namespace {
const Chart ch = Chart::euclidean(4);

PolyOp random_op(Sampler& s, std::mt19937_64& rng, int terms) {
    PolyOp a(ch);
    std::uniform_int_distribution<int> d01(0, 1), dn(0, ch.n - 1), dc(-3, 3);
    for (int t = 0; t < terms; ++t) {
        OpMono m;
        for (int r = 0; r < 2; ++r) {
            int which = std::uniform_int_distribution<int>(0, 5)(rng);
            int i = dn(rng);
            switch (which) {
                case 0: m.x[i]++; break;
                case 1: m.p[i]++; break;
                case 2: m.xi |= 1u << i; break;
                case 3: m.dx[i]++; break;
                case 4: m.dp[i]++; break;
                case 5: m.dxi |= 1u << i; break;
            }
        }
        int c = dc(rng);
        if (c == 0) c = 1;
        a.add_term(m, Scalar(c));
    }
    (void)s;
    return a;
}
}  // namespace

TEST_CASE("canonical commutators") {
    PolyOp dp1_p1 = compose(PolyOp::d_p(ch, 0), PolyOp::mul(SuperPoly::p(ch, 0)));
    PolyOp expect = compose(PolyOp::mul(SuperPoly::p(ch, 0)), PolyOp::d_p(ch, 0)) +
                    PolyOp::identity(ch);
    CHECK(dp1_p1 == expect);

    // odd canonical pair with the left-derivative convention
    PolyOp dxi1_xi1 = compose(PolyOp::d_xi(ch, 0), PolyOp::mul(SuperPoly::xi(ch, 0)));
    PolyOp expect2 = PolyOp::identity(ch) -
                     compose(PolyOp::mul(SuperPoly::xi(ch, 0)), PolyOp::d_xi(ch, 0));
    CHECK(dxi1_xi1 == expect2);
}

TEST_CASE("left derivative convention") {
    SuperPoly w = SuperPoly::xi(ch, 0) * SuperPoly::xi(ch, 1);
    CHECK(PolyOp::d_xi(ch, 0).apply(w) == SuperPoly::xi(ch, 1));
    CHECK(PolyOp::d_xi(ch, 1).apply(w) == -SuperPoly::xi(ch, 0));
}

TEST_CASE("compose agrees with nested apply") {
    Sampler s(ch, 3);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        PolyOp a = random_op(s, rng, 3);
        PolyOp b = random_op(s, rng, 3);
        SuperPoly f = s.poly(3, 2, 2);
        CHECK(compose(a, b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("composition is associative") {
    Sampler s(ch, 29);
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        PolyOp a = random_op(s, rng, 2);
        PolyOp b = random_op(s, rng, 2);
        PolyOp c = random_op(s, rng, 2);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("supercommutator rejects mixed parity") {
    PolyOp mixed = PolyOp::identity(ch) + PolyOp::d_xi(ch, 0);
    CHECK_THROWS_AS(supercommutator(mixed, PolyOp::identity(ch)), Error);
}

TEST_CASE("generator formulas act as expected") {
    PolyOp t = invariant_generator(Gen::T, ch);
    SuperPoly r = SuperPoly::momentum_square(ch);
    CHECK(t.apply(r) == SuperPoly::constant(ch, Scalar(2 * ch.n)));

    PolyOp q = invariant_generator(Gen::Q, ch);
    CHECK(q.apply(SuperPoly::constant(ch, Scalar::one())) == SuperPoly::charge(ch));

    PolyOp d = invariant_generator(Gen::DeRham, ch);
    CHECK(d.apply(SuperPoly::x(ch, 0)) == SuperPoly::xi(ch, 0));

    // apply(Q, .) equals multiplication by the charge function
    Sampler s(ch, 41);
    for (int i = 0; i < 10; ++i) {
        SuperPoly f = s.poly(3);
        CHECK(q.apply(f) == SuperPoly::charge(ch) * f);
    }
}

TEST_CASE("parities of the thirteen generators") {
    for (Gen g : kAllGens) {
        PolyOp a = invariant_generator(g, ch);
        bool odd = g == Gen::Q || g == Gen::Del || g == Gen::DelStar || g == Gen::QStar ||
                   g == Gen::DeRham || g == Gen::DeRhamStar;
        CHECK(a.parity() == (odd ? 1 : 0));
    }
}
