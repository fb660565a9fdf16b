#include "flatjet/counterexample.hpp"
#include "flatjet/dbar.hpp"
#include "flatjet/errors.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/operators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace flatjet;
using namespace flatjet::testing;

namespace {

Jet zk_wirtinger(unsigned k, unsigned N) { return Jet::monomial(2, N, {k, 0}); }

} // namespace

TEST_CASE("wirtinger coordinates")
{
    CHECK(wirtinger(Jet::variable(2, 4, 0)).jet() == make_jet(2, 4, {{{1, 0}, q(1, 2)}, {{0, 1}, q(1, 2)}}));
    CHECK(wirtinger(make_jet(2, 4, {{{2, 0}, q(1)}, {{0, 2}, q(1)}})).jet() == make_jet(2, 4, {{{1, 1}, q(1)}}));
    CHECK(wirtinger(holomorphic_monomial(2, 4)).jet() == zk_wirtinger(2, 4));
    CHECK_THROWS_AS(wirtinger(Jet::variable(3, 4, 0)), InputError);
}

TEST_CASE("wirtinger round trip")
{
    Gen g(41);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = g.integer(0, 1) ? 2 : 4;
        const Jet f = g.jet(n, static_cast<unsigned>(g.integer(0, 6)));
        CHECK(to_real(wirtinger(f)) == f);
    }
}

TEST_CASE("formal holomorphy")
{
    CHECK(is_formally_holomorphic(WirtingerJet(zk_wirtinger(2, 4))));
    CHECK_FALSE(is_formally_holomorphic(WirtingerJet(make_jet(2, 4, {{{1, 1}, q(1)}}))));
    CHECK(is_formally_holomorphic(WirtingerJet(Jet(2, 4))));
}

TEST_CASE("dbar with the unnormalized convention")
{
    CHECK(dbar_apply(holomorphic_monomial(1, 4)).is_zero());
    const Jet zbar = make_jet(2, 4, {{{1, 0}, q(1)}, {{0, 1}, -I}});
    const auto form = dbar_apply(zbar);
    REQUIRE(form.components.size() == 1);
    CHECK(form.components[0] == Jet::constant(2, 3, q(2)));

    std::vector<Scalar> w;
    for (unsigned k = 1; k <= 5; ++k)
        w.push_back(Scalar(factorial(k)));
    CHECK(dbar_apply(weighted_sum(5, 6, holomorphic_monomial, w)).is_zero());
    CHECK_THROWS_AS(dbar_apply(Jet(2, 0)), ReliabilityExhausted);
}

TEST_CASE("dbar of a real jet is closed")
{
    Gen g(42);
    for (int rep = 0; rep < 50; ++rep)
        CHECK(dbar_apply(g.jet(4, 6)).is_closed());
    ZeroOneForm bogus{{Jet::variable(4, 4, 2), Jet(4, 4)}};
    CHECK_FALSE(bogus.is_closed());
}

TEST_CASE("holomorphy is the kernel of dbar")
{
    Gen g(43);
    for (int rep = 0; rep < 100; ++rep) {
        // half the samples holomorphic by construction
        Jet w = g.jet(4, 5);
        if (rep % 2) {
            Jet h(4, 5);
            for (const auto &[gamma, c] : w)
                h.add_term(MultiIndex{gamma[0], 0, gamma[2], 0}, c);
            w = h;
        }
        const WirtingerJet fw(w);
        CHECK(is_formally_holomorphic(fw) == dbar_apply(to_real(fw)).is_zero());
    }
}

TEST_CASE("z^k is annihilated for every k <= N")
{
    const unsigned N = 12;
    for (unsigned k = 0; k <= N; ++k)
        CHECK(dbar_apply(to_real(WirtingerJet(zk_wirtinger(k, N)))).is_zero());
}

TEST_CASE("classification of solution jets")
{
    SolverConfig cfg;
    cfg.trunc_degree = 10;
    const auto cert = build_certificate(cauchy_riemann(10), 8, cfg);
    CHECK(classify_solution(cert.G) == SolutionClass{FormallyHolomorphic{}});
    CHECK(classify_solution(make_jet(2, 4, {{{2, 0}, q(1)}, {{0, 2}, q(1)}})) == SolutionClass{Mixed{2}});
    CHECK(classify_solution(Jet(2, 4)) == SolutionClass{Flat{}});
    // Laplacian u_k = Re z^k mixes z and zbar from degree 1 on
    CHECK(classify_solution(harmonic_polynomial(3, 4)) == SolutionClass{Mixed{3}});
    CHECK(to_string(SolutionClass{Mixed{2}}) == "mixed(2)");
}

TEST_CASE("several complex variables")
{
    CHECK(multidim_G(WirtingerJet(zk_wirtinger(1, 4)), 2).jet() == make_jet(4, 4, {{{1, 0, 0, 0}, q(1)}, {{0, 0, 1, 0}, q(1)}}));

    Jet g1(2, 6);
    for (unsigned k = 1; k <= 3; ++k)
        g1.add_term({k, 0}, Scalar(factorial(k)));
    const auto F = multidim_G(WirtingerJet(g1), 2);
    CHECK(F.jet().coeff({3, 0, 0, 0}) == q(6));
    CHECK(F.jet().coeff({0, 0, 3, 0}) == q(6));
    CHECK(F.jet().coeff({1, 0, 1, 0}).is_zero());

    CHECK(multidim_G(WirtingerJet(Jet(2, 4)), 2).jet().is_zero());
    CHECK_THROWS_AS(multidim_G(WirtingerJet(make_jet(2, 4, {{{1, 1}, q(1)}})), 2), InputError);
}
