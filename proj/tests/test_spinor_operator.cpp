#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sampling.hpp"
#include "superquant/actions.hpp"
#include "superquant/linalg.hpp"
#include "superquant/spinor_operator.hpp"

using namespace superquant;
using superquant::testing::Sampler;

namespace {
const Chart ch = Chart::euclidean(4);
}

TEST_CASE("normal ordering of basic symbols") {
    CliffordRep rep(ch);
    SpinorOp n_p = normal_order(SuperPoly::p(ch, 0), rep);
    // p_1 -> (hbar/i) d_1
    SpinorOp want(ch, rep.dim());
    ExpVec dx{};
    dx[0] = 1;
    want.add_term(zero_exp(), dx, SpinMat::identity(rep.dim()) * Scalar::hbar_over_i());
    CHECK(n_p == want);

    // xi^1 xi^2 -> gamma^1 gamma^2 / 2
    SpinorOp n_xi = normal_order(SuperPoly::xi(ch, 0) * SuperPoly::xi(ch, 1), rep);
    SpinorOp want2(ch, rep.dim());
    want2.add_term(zero_exp(), zero_exp(),
                   rep.gamma(0) * rep.gamma(1) * Scalar(Rat(1, 2)));
    CHECK(n_xi == want2);
}

TEST_CASE("normal ordering is injective on bidegrees") {
    CliffordRep rep(ch);
    for (auto [k, kappa] : {std::pair{1, 1}, std::pair{0, 3}, std::pair{2, 2}}) {
        auto basis = fiber_basis(ch, k, kappa);
        // linear independence of images via symbol round trip
        for (const Mono& m : basis) {
            SuperPoly f = SuperPoly::monomial(ch, m, Scalar::one());
            SpinorOp img = normal_order(f, rep);
            SuperPoly back = hamiltonian_symbol(img, 2 * k + kappa, rep);
            CHECK(back == f * symbol_roundtrip_scale(k, kappa));
        }
    }
}

TEST_CASE("symbol respects multiplication exactly") {
    CliffordRep rep(ch);
    Sampler s(ch, 77);
    for (int t = 0; t < 10; ++t) {
        SuperPoly f(ch), g(ch);
        for (const Mono& m : fiber_basis(ch, 1, 1))
            if (s.uniform(0, 2) == 0) f.add_term(m, s.coeff());
        for (const Mono& m : fiber_basis(ch, 0, 2))
            if (s.uniform(0, 2) == 0) g.add_term(m, s.coeff());
        if (f.is_zero() || g.is_zero()) continue;
        SpinorOp a = normal_order(f, rep), b = normal_order(g, rep);
        SuperPoly sa = hamiltonian_symbol(a, 3, rep), sb = hamiltonian_symbol(b, 2, rep);
        CHECK(hamiltonian_symbol(compose(a, b), 5, rep) == sa * sb);
    }
}

TEST_CASE("symbol order overflow raises") {
    CliffordRep rep(ch);
    SpinorOp a = normal_order(SuperPoly::p(ch, 0), rep);
    CHECK_THROWS_AS(hamiltonian_symbol(a, 1, rep), Error);
}

TEST_CASE("bracket compatibility splits into the two channels") {
    // the commutator symbol at full order vanishes; the dropped-order
    // symbol splits into the derivative channel (exact) and the Clifford
    // channel (scaled by the recorded constant 2 i hbar)
    CliffordRep rep(ch);
    SuperPoly f = SuperPoly::p(ch, 0) * SuperPoly::xi(ch, 1);  // (1,1)
    SuperPoly g = SuperPoly::x(ch, 0) * SuperPoly::xi(ch, 1) * SuperPoly::xi(ch, 2);
    SpinorOp a = normal_order(f, rep), b = normal_order(g, rep);
    SpinorOp comm = compose(a, b) - compose(b, a);  // f even? no: f odd, g even
    int ell = 3 + 2;
    // full-order part vanishes
    CHECK(hamiltonian_symbol(compose(a, b), ell, rep) ==
          hamiltonian_symbol(a, 3, rep) * hamiltonian_symbol(b, 2, rep));
    SuperPoly sym = hamiltonian_symbol(comm, ell - 2, rep);
    SuperPoly br = poisson(hamiltonian_symbol(a, 3, rep), hamiltonian_symbol(b, 2, rep));
    // channel split: p-degree 1 part from derivatives, p-degree... compare
    // channel by channel
    Scalar cliff_scale = Scalar(2) * Scalar::i() * Scalar::hbar();
    for (auto& [bideg, part] : sym.bigrade()) {
        SuperPoly br_part = br.bipart(bideg.first, bideg.second);
        int drop_kappa = 1 + 2 - bideg.second;  // xi-degree drop vs product
        if (drop_kappa == 2)
            CHECK(part == br_part * cliff_scale);
        else
            CHECK(part == br_part);
    }
}

TEST_CASE("dirac operator basics") {
    for (const Chart& c : {Chart::euclidean(4), Chart::lorentzian(4)}) {
        CliffordRep rep(c);
        SpinorOp d = dirac(rep);
        SpinorOp d2 = compose(d, d);
        // D^2 = -Laplacian
        SpinorOp want(c, rep.dim());
        for (int i = 0; i < c.n; ++i) {
            ExpVec dx{};
            dx[i] = 2;
            want.add_term(zero_exp(), dx, SpinMat::identity(rep.dim()) * Scalar(-c.eta(i)));
        }
        CHECK(d2 == want);
        CHECK(hamiltonian_symbol(d, 3, rep) == SuperPoly::charge(c));
        // chirality anticommutes with the matrix part
        SpinorOp chi_op(c, rep.dim());
        chi_op.add_term(zero_exp(), zero_exp(), rep.chirality());
        CHECK((compose(chi_op, d) + compose(d, chi_op)).is_zero());
    }
}

TEST_CASE("right division by the Dirac operator") {
    CliffordRep rep(ch);
    SpinorOp d = dirac(rep);

    SUBCASE("multiples divide exactly") {
        SpinorOp m(ch, rep.dim());
        ExpVec x{};
        x[1] = 1;
        m.add_term(x, zero_exp(), rep.gamma(2) * Scalar(3));
        ExpVec dx{};
        dx[0] = 1;
        m.add_term(zero_exp(), dx, rep.gamma(0) * rep.gamma(1));
        SpinorOp a = compose(m, d);
        auto div = right_divide(a, rep);
        CHECK(div.verdict == RightDivision::Exact);
        CHECK(div.quotient == m);
        CHECK(div.remainder.is_zero());
    }
    SUBCASE("dirac squared divides with quotient dirac") {
        auto div = right_divide(compose(d, d), rep);
        CHECK(div.verdict == RightDivision::Exact);
        CHECK(div.quotient == d);
    }
    SUBCASE("identity is not in the left ideal") {
        auto div = right_divide(SpinorOp::identity(rep), rep);
        CHECK(div.verdict == RightDivision::Refuted);
        CHECK(div.remainder == SpinorOp::identity(rep));
    }
    SUBCASE("partner search") {
        CHECK(higher_symmetry_partner(SpinorOp::identity(rep), rep).value() ==
              SpinorOp::identity(rep));
        CHECK(higher_symmetry_partner(d, rep).value() == d);
    }
}

TEST_CASE("adjoint is an antilinear involutive anti-automorphism") {
    CliffordRep rep(ch);
    // d_i transposes to -d_i
    SpinorOp di(ch, rep.dim());
    ExpVec dx{};
    dx[0] = 1;
    di.add_term(zero_exp(), dx, SpinMat::identity(rep.dim()));
    CHECK(adjoint(di, rep) == -di);

    // gamma^i is self-adjoint in the chirality pairing (recorded sign +1)
    for (int i = 0; i < ch.n; ++i) {
        SpinorOp gi(ch, rep.dim());
        gi.add_term(zero_exp(), zero_exp(), rep.gamma(i));
        CHECK(adjoint(gi, rep) == gi);
    }

    // anti-automorphism and involution on products
    SpinorOp a(ch, rep.dim());
    ExpVec x{};
    x[2] = 1;
    a.add_term(x, dx, rep.gamma(0) * Scalar::i());
    SpinorOp b = dirac(rep);
    CHECK(adjoint(compose(a, b), rep) == compose(adjoint(b, rep), adjoint(a, rep)));
    CHECK(adjoint(adjoint(a, rep), rep) == a);

    CliffordRep lrep(Chart::lorentzian(4));
    CHECK_THROWS_AS(adjoint(dirac(lrep), lrep), Error);
}

TEST_CASE("kosmann derivative closed forms and morphism") {
    CliffordRep rep(ch);
    // translations are plain derivatives
    SpinorOp t = kosmann_lie_derivative({ConfGen::Translation, 0, 0}, Rat(1, 3), rep);
    SpinorOp want(ch, rep.dim());
    ExpVec dx{};
    dx[0] = 1;
    want.add_term(zero_exp(), dx, SpinMat::identity(rep.dim()));
    CHECK(t == want);

    // dilation: x d + lambda n
    Rat lam(1, 3);
    SpinorOp dil = kosmann_lie_derivative({ConfGen::Dilation, 0, 0}, lam, rep);
    SpinorOp want2(ch, rep.dim());
    for (int i = 0; i < ch.n; ++i) {
        ExpVec x{}, d{};
        x[i] = 1;
        d[i] = 1;
        want2.add_term(x, d, SpinMat::identity(rep.dim()));
    }
    want2.add_term(zero_exp(), zero_exp(),
                   SpinMat::identity(rep.dim()) * Scalar(lam * ch.n));
    CHECK(dil == want2);

    // Lie algebra morphism on all generator pairs
    auto basis = conformal_basis(ch);
    std::vector<SpinorOp> images;
    for (const auto& g : basis) images.push_back(kosmann_lie_derivative(g, lam, rep));
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            SpinorOp lhs = compose(images[a], images[b]) - compose(images[b], images[a]);
            auto coeffs = decompose_in_conformal_basis(
                vf_bracket(vector_field(basis[a], ch), vector_field(basis[b], ch)));
            SpinorOp rhs(ch, rep.dim());
            for (size_t k = 0; k < basis.size(); ++k)
                if (coeffs[k] != 0) rhs = rhs + images[k] * Scalar(coeffs[k]);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("quantum action matches the spinor-side commutator") {
    // For every generator X: N(ccL_X P) == L^mu_X o N(P) - N(P) o L^lambda_X.
    // This ties the pulled-back quantum action, the normal ordering and the
    // Kosmann derivative together.
    CliffordRep rep(ch);
    Sampler s(ch, 321);
    for (auto [lam, mu] : {std::pair<Rat, Rat>{Rat(0), Rat(0)},
                           std::pair<Rat, Rat>{frac(ch.n - 1, 2 * ch.n), frac(ch.n + 1, 2 * ch.n)}}) {
        for (const ConfGen& g : conformal_basis(ch)) {
            PolyOp act = quantum_action(g, lam, mu, ch);
            SpinorOp lmu = kosmann_lie_derivative(g, mu, rep);
            SpinorOp llam = kosmann_lie_derivative(g, lam, rep);
            for (int t = 0; t < 3; ++t) {
                SuperPoly p = s.poly(3, 2, 2);
                SpinorOp lhs = normal_order(act.apply(p), rep);
                SpinorOp np = normal_order(p, rep);
                SpinorOp rhs = compose(lmu, np) - compose(np, llam);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("filtration compatibility of composition") {
    CliffordRep rep(ch);
    Sampler s(ch, 55);
    for (int t = 0; t < 6; ++t) {
        SuperPoly f = s.poly(2, 1, 1);
        SuperPoly g = s.poly(2, 1, 1);
        if (f.is_zero() || g.is_zero()) continue;
        SpinorOp a = normal_order(f, rep), b = normal_order(g, rep);
        int oa = hamiltonian_order(a, rep), ob = hamiltonian_order(b, rep);
        CHECK(hamiltonian_order(compose(a, b), rep) <= oa + ob);
    }
}
