#pragma once

// Floating-point illustration, kept apart from the exact core: the Cauchy
// transform of f(z) = z phi(|z|^2), phi a bump supported in [1, 2].

#include <complex>
#include <string>
#include <vector>

namespace flatjet::demo {

using complex = std::complex<double>;

struct AnnulusDatum {
    double amplitude = 1.0;
    /// Nodes per direction of the polar midpoint rule (radial and angular).
    unsigned resolution = 256;

    /// phi(s) = amplitude * exp(-1 / ((s - 1)(2 - s))) on (1, 2), else 0.
    double phi(double s) const;
    complex f(complex z) const;
    /// Throws std::invalid_argument for resolution < 16 or amplitude <= 0.
    void validate() const;
};

/// u(z) = -(1 / (2 pi i)) int f(zeta) / (zeta - z) dzbar ^ dz
///      = -(1 / pi) int f(zeta) / (zeta - z) dA,
/// evaluated in polar coordinates centred at z, which removes the kernel
/// singularity. Amplitude zero is allowed here and gives 0.
complex cauchy_transform(const AnnulusDatum &datum, complex z);

struct CheckedValue {
    complex value;
    /// |u(2r) - u(r)|.
    double refinement_gap;
    bool resolved;
};

/// Evaluates at the datum's resolution and at twice it; `resolved` is false
/// when the two disagree by more than tol * max(1, |u|).
CheckedValue cauchy_transform_checked(const AnnulusDatum &datum, complex z, double tol);

/// int_1^2 phi(s) ds by composite Simpson on `intervals` panels.
double bump_integral(const AnnulusDatum &datum, unsigned intervals = 4096);

struct SupportReport {
    complex u0;
    /// -int phi, the value u(0) must match.
    double radial_prediction;
    double relative_error;
    /// u at points inside the hole |z| < 1; all approximately u(0).
    std::vector<std::pair<complex, complex>> hole_samples;
    /// u at points with |z| > sqrt(2); all approximately 0.
    std::vector<std::pair<complex, complex>> outer_samples;
    /// |u(0) at resolution r / 2^i - reference|, i = 2, 1, for the trend.
    std::vector<std::pair<unsigned, double>> refinement;
    /// max |(u_x + i u_y) / 2 - f| at interior annulus points (finite differences).
    double dbar_residual;
    bool u0_nonzero;
};

SupportReport support_demo(const AnnulusDatum &datum);

/// Samples u on a square grid [-extent, extent]^2 with `points` nodes per side.
struct GridSample {
    double x, y;
    complex u;
};
std::vector<GridSample> sample_grid(const AnnulusDatum &datum, unsigned points, double extent);

std::string format_report(const SupportReport &r);

} // namespace flatjet::demo
