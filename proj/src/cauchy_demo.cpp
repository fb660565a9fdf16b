#include "flatjet/cauchy_demo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace flatjet::demo {

namespace {

constexpr double kOuter = std::numbers::sqrt2; // |zeta| <= sqrt(2) on supp f

} // namespace

double AnnulusDatum::phi(double s) const
{
    if (s <= 1.0 || s >= 2.0)
        return 0.0;
    return amplitude * std::exp(-1.0 / ((s - 1.0) * (2.0 - s)));
}

complex AnnulusDatum::f(complex z) const { return z * phi(std::norm(z)); }

void AnnulusDatum::validate() const
{
    if (resolution < 16)
        throw std::invalid_argument("resolution must be at least 16");
    if (!(amplitude > 0.0))
        throw std::invalid_argument("amplitude must be positive");
}

complex cauchy_transform(const AnnulusDatum &datum, complex z)
{
    if (datum.resolution < 16)
        throw std::invalid_argument("resolution must be at least 16");
    // zeta = z + rho e^{i theta}, dA = rho d rho d theta; the rho cancels the
    // kernel: f(zeta) / (zeta - z) dA = f(zeta) e^{-i theta} d rho d theta.
    const double rho_max = std::abs(z) + kOuter;
    const unsigned n_rho = 2 * datum.resolution;
    const unsigned n_theta = datum.resolution;
    const double h_rho = rho_max / n_rho;
    const double h_theta = 2.0 * std::numbers::pi / n_theta;
    complex sum = 0.0;
    for (unsigned a = 0; a < n_theta; ++a) {
        const double theta = (a + 0.5) * h_theta;
        const complex dir = std::polar(1.0, theta);
        complex ray = 0.0;
        for (unsigned r = 0; r < n_rho; ++r) {
            const double rho = (r + 0.5) * h_rho;
            ray += datum.f(z + rho * dir);
        }
        sum += ray * std::conj(dir);
    }
    return -sum * h_rho * h_theta / std::numbers::pi;
}

CheckedValue cauchy_transform_checked(const AnnulusDatum &datum, complex z, double tol)
{
    const complex coarse = cauchy_transform(datum, z);
    AnnulusDatum fine = datum;
    fine.resolution *= 2;
    const complex refined = cauchy_transform(fine, z);
    const double gap = std::abs(refined - coarse);
    return {refined, gap, gap <= tol * std::max(1.0, std::abs(refined))};
}

double bump_integral(const AnnulusDatum &datum, unsigned intervals)
{
    if (intervals % 2)
        ++intervals;
    const double h = 1.0 / intervals;
    double s = datum.phi(1.0) + datum.phi(2.0);
    for (unsigned i = 1; i < intervals; ++i)
        s += (i % 2 ? 4.0 : 2.0) * datum.phi(1.0 + i * h);
    return s * h / 3.0;
}

SupportReport support_demo(const AnnulusDatum &datum)
{
    datum.validate();
    SupportReport r;
    r.u0 = cauchy_transform(datum, 0.0);
    r.radial_prediction = -bump_integral(datum);
    r.relative_error = std::abs(r.u0 - r.radial_prediction) / std::abs(r.radial_prediction);
    r.u0_nonzero = std::abs(r.u0) > 0.5 * std::abs(r.radial_prediction);

    for (complex z : {complex(0.5, 0.0), complex(0.0, 0.7), complex(-0.4, -0.4)})
        r.hole_samples.emplace_back(z, cauchy_transform(datum, z));
    for (complex z : {complex(1.6, 0.0), complex(0.0, -2.5), complex(3.0, 3.0)})
        r.outer_samples.emplace_back(z, cauchy_transform(datum, z));

    for (unsigned shift : {2u, 1u}) {
        AnnulusDatum coarse = datum;
        coarse.resolution = std::max(16u, datum.resolution >> shift);
        r.refinement.emplace_back(coarse.resolution, std::abs(cauchy_transform(coarse, 0.0) - r.u0));
    }

    // central differences; unlike the jet module (d_x + i d_y), the transform
    // solves the standard (1/2)(d_x + i d_y) u = f
    const double h = 1e-3;
    r.dbar_residual = 0.0;
    for (complex z : {complex(1.2, 0.0), complex(0.0, 1.15), complex(-0.85, 0.85)}) {
        const complex ux = (cauchy_transform(datum, z + h) - cauchy_transform(datum, z - h)) / (2 * h);
        const complex uy =
            (cauchy_transform(datum, z + complex(0, h)) - cauchy_transform(datum, z - complex(0, h))) / (2 * h);
        const complex dbar = 0.5 * (ux + complex(0, 1) * uy);
        r.dbar_residual = std::max(r.dbar_residual, std::abs(dbar - datum.f(z)));
    }
    return r;
}

std::vector<GridSample> sample_grid(const AnnulusDatum &datum, unsigned points, double extent)
{
    if (points < 2)
        throw std::invalid_argument("grid needs at least 2 points per side");
    std::vector<GridSample> out;
    out.reserve(points * points);
    const double step = 2.0 * extent / (points - 1);
    for (unsigned i = 0; i < points; ++i)
        for (unsigned j = 0; j < points; ++j) {
            const double x = -extent + j * step;
            const double y = -extent + i * step;
            out.push_back({x, y, cauchy_transform(datum, complex(x, y))});
        }
    return out;
}

std::string format_report(const SupportReport &r)
{
    std::ostringstream os;
    os.precision(10);
    os << "u(0)                 = " << r.u0.real() << " + " << r.u0.imag() << "i\n";
    os << "-int_1^2 phi(s) ds   = " << r.radial_prediction << "\n";
    os << "relative error       = " << r.relative_error << "\n";
    os << "u(0) != 0            : " << (r.u0_nonzero ? "yes" : "no") << "\n";
    os << "inside the hole (|z| < 1), u is constant:\n";
    for (const auto &[z, u] : r.hole_samples)
        os << "  z = " << z << "  u = " << u << "\n";
    os << "outside (|z| > sqrt 2), u vanishes:\n";
    for (const auto &[z, u] : r.outer_samples)
        os << "  z = " << z << "  |u| = " << std::abs(u) << "\n";
    os << "refinement (|u_r(0) - u(0)|):\n";
    for (const auto &[res, d] : r.refinement)
        os << "  resolution " << res << ": " << d << "\n";
    os << "max |dbar u - f| at annulus points = " << r.dbar_residual << "\n";
    return os.str();
}

} // namespace flatjet::demo
