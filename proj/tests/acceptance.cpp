// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "flatjet/cauchy_demo.hpp"
#include "flatjet/counterexample.hpp"
#include "flatjet/dbar.hpp"
#include "flatjet/io.hpp"
#include "flatjet/ode1d.hpp"

#include "support/generators.hpp"
#include "support/operators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace flatjet;
using namespace flatjet::testing;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

SolverConfig config(unsigned N)
{
    SolverConfig cfg;
    cfg.trunc_degree = N;
    return cfg;
}

bool diagonal_is_factorial(const CounterexampleCertificate &c)
{
    for (unsigned k = 1; k <= c.K; ++k)
        if (c.diagonal[k - 1] != Scalar(factorial(k)))
            return false;
    return c.diagonal.size() == c.K;
}

Outcome harmonic_oracle()
{
    const auto t0 = clock_type::now();
    const auto op = laplacian(2, 12);
    unsigned bad = 0;
    for (unsigned k = 1; k <= 10; ++k)
        if (build_uk(op, default_pk(k, 2, 12), config(12)) != harmonic_polynomial(k, 12))
            ++bad;
    const double s = seconds_since(t0);
    std::ostringstream os;
    os << bad << " mismatches for k = 1..10, " << s << " s";
    return {bad == 0 && s < 1.0, os.str()};
}

Outcome holomorphic_oracle()
{
    const auto op = cauchy_riemann(12);
    unsigned bad = 0;
    for (unsigned k = 1; k <= 10; ++k)
        if (build_uk(op, default_pk(k, 2, 12), config(12)) != holomorphic_monomial(k, 12))
            ++bad;
    return {bad == 0, std::to_string(bad) + " mismatches for k = 1..10"};
}

Outcome certificate_soundness()
{
    std::ostringstream os;
    bool ok = true;
    for (const auto &[name, op] : {std::pair{"laplacian", laplacian(2, 12)}, std::pair{"cauchy-riemann", cauchy_riemann(12)}}) {
        const auto c = build_certificate(op, 10, config(12));
        const bool zero = c.residual.is_zero() && c.verified_through_degree >= 10;
        const bool diag = diagonal_is_factorial(c);
        ok = ok && zero && diag && c.diverges;
        os << (os.tellp() > 0 ? "; " : "") << name << ": residual zero through " << c.verified_through_degree << ", diagonal "
           << (diag ? "= k!" : "wrong");
    }
    return {ok, os.str()};
}

Outcome variable_coefficients()
{
    const auto op = laplacian_with_drift(10);
    const auto c = build_certificate(op, 6, config(10));
    bool traces_ok = true;
    unsigned worst = 0;
    for (unsigned k = 1; k <= 6; ++k) {
        const auto [u, trace] = build_uk_traced(op, c.p_list[k - 1], config(10));
        worst = std::max(worst, trace.stabilized_at);
        if (trace.stabilized_at > 9)
            traces_ok = false;
        for (std::size_t nu = 0; nu < trace.differences.size(); ++nu)
            if (auto o = last_variable_order(trace.differences[nu]); o && *o < 2 + nu)
                traces_ok = false;
    }
    std::ostringstream os;
    os << "residual zero through " << c.verified_through_degree << ", worst stabilization at nu = " << worst;
    return {c.residual.is_zero() && c.verified_through_degree >= 8 && traces_ok, os.str()};
}

Outcome scaling_invariance()
{
    const auto op = laplacian(2, 12);
    CertificateOptions scaled;
    scaled.boundary = [](unsigned k, std::size_t dim) {
        Jet p = default_pk(k, dim);
        p *= Scalar(7);
        return p;
    };
    const json a = to_json(build_certificate(op, 10, config(12)));
    const json b = to_json(build_certificate(op, 10, config(12), scaled));
    const bool residual = a["residual"].dump() == b["residual"].dump();
    const bool diagonal = a["diagonal"].dump() == b["diagonal"].dump();
    return {residual && diagonal,
            std::string("residual ") + (residual ? "identical" : "differs") + ", diagonal " + (diagonal ? "identical" : "differs")};
}

Outcome baire_determinism()
{
    std::vector<Jet> p;
    for (unsigned k = 1; k <= 10; ++k)
        p.push_back(default_pk(k, 2));
    const BairePoint a = baire_point(p);
    const BairePoint b = baire_point(p);
    bool nonzero = true;
    for (const auto &w : a.witnesses)
        nonzero = nonzero && !w.is_zero();
    const bool same = a.coords == b.coords && a.witnesses == b.witnesses;
    std::string coords;
    for (const auto &c : a.coords)
        coords += (coords.empty() ? "" : ", ") + to_string(c);
    return {nonzero && same && a.witnesses.size() == 10, "x = (" + coords + ")"};
}

Outcome ode_contrast()
{
    Gen gen(0xacce97);
    unsigned bad = 0;
    for (unsigned c = 0; c < 20; ++c) {
        OdeProblem p;
        p.order = static_cast<unsigned>(gen.integer(1, 3));
        p.trunc_degree = p.order + 8;
        for (unsigned j = 0; j < p.order; ++j)
            p.coefficients.push_back(gen.jet(1, p.trunc_degree));
        p.data = Jet(1, p.trunc_degree);
        if (!ode_jet_solve(p).is_zero())
            ++bad;
    }
    OdeProblem p;
    p.order = 2;
    p.trunc_degree = 8;
    p.coefficients = {Jet(1, 8), Jet(1, 8)};
    p.data = Jet::variable(1, 8, 0);
    const bool cubic = ode_jet_solve(p) == Jet::monomial(1, 8, MultiIndex{3}, Scalar::ratio(1, 6));
    return {bad == 0 && cubic, std::to_string(bad) + " nonzero solutions for zero data; f'' = x gives " + (cubic ? "x^3/6" : "something else")};
}

Outcome classification()
{
    const auto c = build_certificate(cauchy_riemann(12), 10, config(12));
    const auto g_class = classify_solution(c.G);
    Jet zzbar(2, 4);
    zzbar.add_term(MultiIndex{2, 0}, Scalar(1));
    zzbar.add_term(MultiIndex{0, 2}, Scalar(1));
    const auto m_class = classify_solution(zzbar);
    const WirtingerJet F = multidim_G(wirtinger(c.G), 2);
    const bool dbar_zero = dbar_apply(to_real(F)).is_zero();
    const bool ok = std::holds_alternative<FormallyHolomorphic>(g_class) && m_class == SolutionClass{Mixed{2}} && dbar_zero;
    return {ok, "G: " + to_string(g_class) + ", z zbar: " + to_string(m_class) + ", dbar F " + (dbar_zero ? "= 0" : "!= 0")};
}

Outcome cauchy_demo()
{
    constexpr double pinned = 0.007029858406609656;
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double oracle = integrator.integrate([](double s) { return std::exp(-1.0 / ((s - 1.0) * (2.0 - s))); }, 1.0, 2.0);
    if (std::abs(oracle - pinned) > 1e-12 * pinned)
        return {false, "1-D oracle disagrees with the pinned value"};
    const auto t0 = clock_type::now();
    const demo::AnnulusDatum d;
    const auto u0 = demo::cauchy_transform(d, 0.0);
    const double s = seconds_since(t0);
    const double rel = std::abs(u0 - std::complex<double>(-pinned, 0.0)) / pinned;
    std::ostringstream os;
    os << "u(0) = " << u0.real() << ", relative error " << rel << ", " << s << " s";
    return {rel < 1e-3 && s < 10.0, os.str()};
}

Outcome property_suite()
{
    const unsigned ring = ring_law_failures(1, 1000);
    const unsigned recip = reciprocal_failures(2, 1000);
    const unsigned comm = derivative_commutation_failures(3, 1000);
    const unsigned subst = substitution_inverse_failures(4, 1000);
    std::ostringstream os;
    os << "failures: ring " << ring << ", reciprocal " << recip << ", derivative " << comm << ", substitution " << subst;
    return {ring + recip + comm + subst == 0, os.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"harmonic oracle", harmonic_oracle},
        {"holomorphic oracle", holomorphic_oracle},
        {"certificate soundness", certificate_soundness},
        {"variable coefficients", variable_coefficients},
        {"scaling invariance", scaling_invariance},
        {"baire determinism", baire_determinism},
        {"1-D contrast", ode_contrast},
        {"classification", classification},
        {"cauchy demo", cauchy_demo},
        {"core arithmetic properties", property_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception &e) {
            r = {false, std::string("threw: ") + e.what()};
        }
        failed += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << r.detail << std::endl;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
