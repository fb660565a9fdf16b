#include "flatjet/errors.hpp"
#include "flatjet/recursion.hpp"

#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/operators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace flatjet;
using namespace flatjet::testing;

namespace {

SolverConfig config(unsigned N)
{
    SolverConfig cfg;
    cfg.trunc_degree = N;
    return cfg;
}

Jet xk(unsigned k, unsigned N = 8) { return Jet::monomial(2, N, MultiIndex{k, 0}); }

} // namespace

TEST_CASE("inverting D^beta")
{
    CHECK(solve_dbeta(Jet::constant(2, 6, q(-2)), 2) == make_jet(2, 8, {{{0, 2}, q(-1)}}));
    CHECK(solve_dbeta(make_jet(2, 6, {{{0, 1}, q(1)}}), 2) == make_jet(2, 8, {{{0, 3}, q(1, 6)}}));
    CHECK(solve_dbeta(Jet(2, 6), 2).is_zero());
    CHECK(solve_dbeta(Jet(2, 6), 2).trunc_degree() == 8);
}

TEST_CASE("D^beta undoes solve_dbeta on random right-hand sides")
{
    Gen g(31);
    for (int rep = 0; rep < 200; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const auto m = static_cast<unsigned>(g.integer(1, 3));
        const auto N = static_cast<unsigned>(g.integer(0, 8));
        const Jet rhs = g.jet(n, N);
        const Jet v = solve_dbeta(rhs, m);
        CHECK(derive(v, MultiIndex::unit(n, n - 1, m)) == rhs);
        if (auto o = last_variable_order(v))
            CHECK(*o >= m);
    }
}

TEST_CASE("picard iteration on the worked examples")
{
    SUBCASE("laplacian, x^2")
    {
        const auto trace = picard_iterate(canonical_form(laplacian(2, 8)), xk(2), config(8));
        CHECK(trace.solution() == make_jet(2, 8, {{{0, 2}, q(-1)}}));
        CHECK(trace.stabilized_at == 1);
    }
    SUBCASE("cauchy-riemann, x")
    {
        const auto trace = picard_iterate(canonical_form(cauchy_riemann(8)), xk(1), config(8));
        CHECK(trace.solution() == make_jet(2, 8, {{{0, 1}, I}}));
        CHECK(trace.stabilized_at == 1);
    }
    SUBCASE("laplacian, x^3")
    {
        const auto trace = picard_iterate(canonical_form(laplacian(2, 8)), xk(3), config(8));
        CHECK(trace.solution() == make_jet(2, 8, {{{1, 2}, q(-3)}}));
        CHECK(trace.stabilized_at == 1);
    }
}

TEST_CASE("trace invariants")
{
    const unsigned N = 10;
    const auto L = laplacian_with_drift(N);
    const auto canon = canonical_form(L);
    for (unsigned k = 1; k <= 6; ++k) {
        const auto trace = picard_iterate(canon, xk(k, N), config(N));
        CHECK(trace.iterates.front().is_zero());
        CHECK(trace.differences.back().is_zero());
        CHECK(trace.stabilized_at <= N - 2 + 1);
        for (std::size_t nu = 0; nu < trace.differences.size(); ++nu)
            if (auto o = last_variable_order(trace.differences[nu]))
                CHECK(*o >= 2 + nu);
        for (std::size_t nu = 1; nu < trace.iterates.size(); ++nu) {
            const auto o = ord(trace.iterates[nu]);
            CHECK((!o || *o >= k));
            if (auto xo = last_variable_order(trace.iterates[nu]))
                CHECK(*xo >= 2);
        }
        // fixed point: D^beta v = sum r D^alpha v - L' p through N - m
        const Jet &v = trace.solution();
        Jet rhs = -apply(canon, xk(k, N));
        for (const auto &[alpha, r] : canon.remainder)
            rhs = rhs + mul(r, derive(v, alpha));
        CHECK(derive(v, canon.beta) == rhs);
    }
}

TEST_CASE("iteration cap is enforced")
{
    SolverConfig cfg = config(10);
    cfg.max_iterations = 1;
    CHECK_THROWS_AS(picard_iterate(canonical_form(laplacian_with_drift(10)), xk(2, 10), cfg), InvariantViolation);
}

TEST_CASE("boundary polynomial preconditions")
{
    const auto canon = canonical_form(laplacian(2, 8));
    CHECK_THROWS_AS(picard_iterate(canon, make_jet(2, 8, {{{1, 0}, q(1)}, {{2, 0}, q(1)}}), config(8)), InputError);
    CHECK_THROWS_AS(picard_iterate(canon, make_jet(2, 8, {{{1, 1}, q(1)}}), config(8)), InputError);
    CHECK_THROWS_AS(picard_iterate(canon, Jet(2, 8), config(8)), InputError);
    CHECK_THROWS_AS(picard_iterate(canon, xk(9, 9), config(8)), InputError);
    CHECK_THROWS_AS(picard_iterate(canon, xk(2), config(1)), InputError);
}

TEST_CASE("u_k for the laplacian is Re z^k")
{
    const auto L = laplacian(2, 12);
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(build_uk(L, xk(k, 12), config(12)) == harmonic_polynomial(k, 12));
}

TEST_CASE("u_k for cauchy-riemann is z^k")
{
    const auto L = cauchy_riemann(12);
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(build_uk(L, xk(k, 12), config(12)) == holomorphic_monomial(k, 12));
}

TEST_CASE("a boundary polynomial already in the kernel is its own solution")
{
    const auto [u, trace] = build_uk_traced(laplacian(2, 8), xk(1), config(8));
    CHECK(u == xk(1));
    CHECK(trace.stabilized_at == 0);
}

TEST_CASE("degenerate k = 0")
{
    const auto L = laplacian_with_drift(8);
    const Jet u = build_uk(L, Jet::constant(2, 8, q(1)), config(8));
    CHECK(ord(u) == 0u);
    CHECK(apply(L, u).is_zero());
}

TEST_CASE("solutions for random drift operators in three variables")
{
    Gen g(32);
    for (int rep = 0; rep < 6; ++rep) {
        const unsigned N = 8;
        const Scalar eps = g.scalar(false), c = g.scalar(false);
        DiffOperator::Terms t;
        for (std::size_t i = 0; i < 3; ++i)
            t.emplace(MultiIndex::unit(3, i, 2), Jet::constant(3, N, q(1)));
        t.emplace(MultiIndex{1, 0, 0}, Jet::monomial(3, N, {1, 0, 0}, eps));
        t.emplace(MultiIndex{0, 0, 0}, Jet::constant(3, N, c));
        const DiffOperator L(3, 2, N, t);
        for (unsigned k = 1; k <= 6; ++k) {
            const Jet p = make_jet(3, N, {{MultiIndex{k, 0, 0}, q(1)}, {MultiIndex{0, k, 0}, g.nonzero_scalar()}});
            const Jet u = build_uk(L, p, config(N));
            CHECK(apply(L, u).is_zero());
            CHECK(ord(u) == k);
            CHECK(restrict_last_zero(u) == p);
        }
    }
}

TEST_CASE("the recursion is linear in p_k")
{
    const auto L = laplacian_with_drift(10, q(3, 5), q(-2));
    for (const Scalar c : {q(7), q(-1, 3), I + q(2)})
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(build_uk(L, c * xk(k, 10), config(10)) == c * build_uk(L, xk(k, 10), config(10)));
}

TEST_CASE("majorant normalization")
{
    const std::vector<Rational> radii{Rational(1, 2), Rational(1, 2)};
    // L x^3 = 6x for the laplacian: bound 6 * 1/2 = 3
    CHECK(majorant_bound(apply(laplacian(2, 8), xk(3)), radii) == 3);
    SolverConfig cfg = config(8);
    cfg.normalize = true;
    cfg.radii = radii;
    CHECK(normalization_factor(laplacian(2, 8), xk(3), cfg) == q(1, 3));
    CHECK(normalization_factor(laplacian(2, 8), xk(1), cfg) == q(1));

    cfg.radii = {Rational(1), Rational(1, 2)};
    CHECK_THROWS_AS(cfg.validate(2, 2), InputError);
}
