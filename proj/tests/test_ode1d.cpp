#include "flatjet/errors.hpp"
#include "flatjet/ode1d.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace flatjet;
using namespace flatjet::testing;

namespace {

OdeProblem problem(unsigned order, unsigned N, std::vector<Jet> a, Jet g)
{
    OdeProblem p;
    p.order = order;
    p.trunc_degree = N;
    p.coefficients = std::move(a);
    p.data = std::move(g);
    return p;
}

} // namespace

TEST_CASE("worked examples")
{
    const auto zero = Jet(1, 6);
    CHECK(ode_jet_solve(problem(2, 6, {zero, zero}, make_jet(1, 6, {{{1}, q(1)}}))) == make_jet(1, 6, {{{3}, q(1, 6)}}));
    CHECK(ode_jet_solve(problem(2, 4, {Jet::constant(1, 4, q(1)), Jet(1, 4)}, Jet::constant(1, 4, q(1))))
          == make_jet(1, 4, {{{2}, q(1, 2)}, {{4}, q(-1, 24)}}));
}

TEST_CASE("flat data gives the flat solution")
{
    Gen g(51);
    for (int rep = 0; rep < 50; ++rep) {
        const auto n = static_cast<unsigned>(g.integer(1, 4));
        const unsigned N = n + static_cast<unsigned>(g.integer(0, 8));
        std::vector<Jet> a;
        for (unsigned j = 0; j < n; ++j)
            a.push_back(g.jet(1, N));
        CHECK(ode_jet_solve(problem(n, N, a, Jet(1, N))).is_zero());
    }
}

TEST_CASE("residual and Cauchy data")
{
    Gen g(52);
    for (int rep = 0; rep < 50; ++rep) {
        const auto n = static_cast<unsigned>(g.integer(1, 4));
        const unsigned N = n + static_cast<unsigned>(g.integer(0, 8));
        std::vector<Jet> a;
        for (unsigned j = 0; j < n; ++j)
            a.push_back(g.jet(1, N));
        const auto p = problem(n, N, a, g.jet(1, N));
        const Jet f = ode_jet_solve(p);
        CHECK(ode_apply(p, f) == truncate(p.data, N - n));
        const auto o = ord(f);
        CHECK((!o || *o >= n));
    }
}

TEST_CASE("pure n-th derivative raises the order by n")
{
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned r = 0; r <= 4; ++r) {
            const unsigned N = 10;
            std::vector<Jet> a(n, Jet(1, N));
            const Jet f = ode_jet_solve(problem(n, N, a, make_jet(1, N, {{{r}, q(1)}, {{r + 1}, q(3)}})));
            CHECK(ord(f) == r + n);
        }
}

TEST_CASE("malformed problems")
{
    CHECK_THROWS_AS(ode_jet_solve(problem(2, 6, {Jet(1, 6)}, Jet(1, 6))), InputError);
    CHECK_THROWS_AS(ode_jet_solve(problem(2, 1, {Jet(1, 1), Jet(1, 1)}, Jet(1, 1))), InputError);
    CHECK_THROWS_AS(ode_jet_solve(problem(1, 6, {Jet(2, 6)}, Jet(1, 6))), InputError);
    CHECK_THROWS_AS(ode_jet_solve(problem(1, 6, {Jet(1, 5)}, Jet(1, 6))), InputError);
}
