#include "flatjet/cauchy_demo.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <doctest.h>

#include <cmath>

using namespace flatjet::demo;

namespace {

// int_1^2 exp(-1 / ((s - 1)(2 - s))) ds, computed with 30-digit quadrature
// before the 2-D code existed.
constexpr double kBumpIntegral = 0.007029858406609656;

double oracle_integral()
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate([](double s) { return std::exp(-1.0 / ((s - 1.0) * (2.0 - s))); }, 1.0, 2.0);
}

} // namespace

TEST_CASE("the pinned 1-D oracle agrees with an independent quadrature")
{
    CHECK(oracle_integral() == doctest::Approx(kBumpIntegral).epsilon(1e-12));
    CHECK(bump_integral(AnnulusDatum{}) == doctest::Approx(kBumpIntegral).epsilon(1e-10));
}

TEST_CASE("u(0) is minus the bump integral")
{
    const complex u0 = cauchy_transform(AnnulusDatum{}, 0.0);
    CHECK(std::abs(u0 - (-kBumpIntegral)) / kBumpIntegral < 1e-3);
    CHECK(std::abs(u0.imag()) < 1e-12);
}

TEST_CASE("zero amplitude gives zero")
{
    AnnulusDatum d;
    d.amplitude = 0.0;
    CHECK(std::abs(cauchy_transform(d, complex(0.3, -0.2))) == 0.0);
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("linear in the amplitude")
{
    AnnulusDatum d1, d2;
    d2.amplitude = 2.0;
    for (complex z : {complex(0.0), complex(0.5, 0.5), complex(1.2, 0.1), complex(2.5, 0.0)}) {
        const complex a = cauchy_transform(d1, z), b = cauchy_transform(d2, z);
        CHECK(std::abs(b - 2.0 * a) <= 1e-9 * std::max(std::abs(b), 1e-300));
    }
}

TEST_CASE("decays away from the annulus")
{
    // |u(z)| <= (1/pi) int |f| dA / (|z| - 2), and (1/pi) int |f| dA = int sqrt(s) phi(s) ds
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double mass =
        integrator.integrate([](double s) { return std::sqrt(s) * std::exp(-1.0 / ((s - 1.0) * (2.0 - s))); }, 1.0, 2.0);
    for (double r : {3.0, 5.0, 20.0})
        CHECK(std::abs(cauchy_transform(AnnulusDatum{}, complex(r, 0.3 * r))) <= mass / (std::abs(complex(r, 0.3 * r)) - 2.0));
}

TEST_CASE("u is constant in the hole and vanishes outside")
{
    const auto report = support_demo(AnnulusDatum{});
    CHECK(report.u0_nonzero);
    CHECK(report.relative_error < 1e-3);
    for (const auto &[z, u] : report.hole_samples)
        CHECK(std::abs(u - report.u0) < 1e-6);
    for (const auto &[z, u] : report.outer_samples)
        CHECK(std::abs(u) < 1e-6);
}

TEST_CASE("refinement and the dbar spot check")
{
    const auto report = support_demo(AnnulusDatum{});
    REQUIRE(report.refinement.size() == 2);
    CHECK(report.refinement[1].second <= report.refinement[0].second);
    CHECK(report.dbar_residual < 5e-2);
}

TEST_CASE("refinement flag")
{
    AnnulusDatum d;
    d.resolution = 16;
    const auto coarse = cauchy_transform_checked(d, complex(1.1, 0.2), 1e-12);
    CHECK_FALSE(coarse.resolved);
    d.resolution = 256;
    CHECK(cauchy_transform_checked(d, 0.0, 1e-6).resolved);
}

TEST_CASE("grid sampling")
{
    AnnulusDatum d;
    d.resolution = 32;
    const auto grid = sample_grid(d, 3, 1.0);
    REQUIRE(grid.size() == 9);
    CHECK(grid[4].x == 0.0);
    CHECK(grid[4].y == 0.0);
    CHECK_THROWS_AS(sample_grid(d, 1, 1.0), std::invalid_argument);
}
