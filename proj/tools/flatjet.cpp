// flatjet command-line front end.
//
// Exit codes: 0 success, 1 a checked invariant failed, 2 bad input.
// FLATJET_THREADS caps the number of concurrent u_k solves in `certify`.

#include "flatjet/cauchy_demo.hpp"
#include "flatjet/counterexample.hpp"
#include "flatjet/dbar.hpp"
#include "flatjet/errors.hpp"
#include "flatjet/io.hpp"
#include "flatjet/ode1d.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

namespace fs = std::filesystem;
using namespace flatjet;

namespace {

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kInput = 2;

unsigned thread_cap()
{
    if (const char *env = std::getenv("FLATJET_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception &) {
        }
        throw InputError(std::string("FLATJET_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void require_writable(const std::string &path)
{
    if (path.empty() || path == "-")
        return;
    const fs::path parent = fs::absolute(path).parent_path();
    if (!fs::is_directory(parent))
        throw InputError("output directory does not exist: " + parent.string());
}

void write_text(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

DiffOperator load_operator(const std::string &path)
{
    if (path.empty())
        return DiffOperator::constant(2, 32, {{MultiIndex{2, 0}, Scalar(1)}, {MultiIndex{0, 2}, Scalar(1)}});
    return parse_operator_file(path);
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
    std::string op;
    unsigned samples = 6;
};

int run_check(const CheckArgs &a)
{
    const DiffOperator op = load_operator(a.op);
    std::cout << "operator: dim " << op.dim() << ", order " << op.order() << ", digest " << operator_digest(op) << "\n";
    const auto report = ellipticity_check(op, a.samples);
    std::cout << "principal symbol at 0 sampled on " << report.directions.size() << " directions: ";
    bool ok = report.passed();
    if (ok) {
        std::cout << "nonzero everywhere (sampling only, not a proof)\n";
    } else {
        std::cout << "vanishes at (";
        for (std::size_t i = 0; i < report.failed_direction->size(); ++i)
            std::cout << (i ? ", " : "") << (*report.failed_direction)[i];
        std::cout << ")\n";
    }
    try {
        const auto canon = canonical_form(op);
        std::cout << "canonical form: D^" << canon.beta.str() << " - sum r_alpha D^alpha\n";
        for (const auto &[alpha, r] : canon.remainder)
            std::cout << "  r" << alpha.str() << " = " << to_string(r) << "\n";
    } catch (const InputError &e) {
        std::cout << "canonical form: unavailable (" << e.what() << ")\n";
        ok = false;
    }
    return ok ? kOk : kInvariant;
}

// --- uk -----------------------------------------------------------------------

struct UkArgs {
    std::string op;
    unsigned k = 1;
    unsigned N = 12;
    std::string pk = "default";
    std::string output;
    std::string trace;
};

int run_uk(const UkArgs &a)
{
    require_writable(a.output);
    require_writable(a.trace);
    const DiffOperator op = load_operator(a.op);
    Jet p = a.pk == "default" ? default_pk(a.k, op.dim(), a.N)
                              : jet_from_json(read_json_file(a.pk), op.dim(), a.N, a.pk);
    if (a.pk != "default" && !p.is_zero() && p.begin()->first.degree() != a.k)
        throw InputError(a.pk + ": boundary polynomial has degree " + std::to_string(p.begin()->first.degree())
                         + ", expected " + std::to_string(a.k));
    SolverConfig cfg;
    cfg.trunc_degree = a.N;
    const auto [u, trace] = build_uk_traced(op, p, cfg);
    write_text(a.output, json{{"k", a.k}, {"N", a.N}, {"trunc_degree", u.trunc_degree()}, {"u", to_json(u)}}.dump(2) + "\n");
    if (!a.trace.empty())
        write_text(a.trace, to_json(trace).dump(2) + "\n");
    std::cerr << "u_" << a.k << ": order " << *ord(u) << ", recursion stabilized at nu = " << trace.stabilized_at << "\n";
    return kOk;
}

// --- certify ------------------------------------------------------------------

struct CertifyArgs {
    std::string op;
    unsigned K = 10;
    unsigned N = 12;
    std::string output;
    bool normalize = false;
};

int run_certify(const CertifyArgs &a)
{
    require_writable(a.output);
    const DiffOperator op = load_operator(a.op);
    SolverConfig cfg;
    cfg.trunc_degree = a.N;
    cfg.normalize = a.normalize;
    CertificateOptions opts;
    opts.threads = thread_cap();
    const auto cert = build_certificate(op, a.K, cfg, opts);
    if (a.output.empty() || a.output == "-")
        std::cout << serialize(cert);
    else
        emit_certificate(cert, a.output);
    std::cerr << "certificate: L(G) vanishes through degree " << cert.verified_through_degree << "; b_k p_k(x) = k! for k = 1.."
              << cert.K << "; the series diverges along t x for every t != 0\n";
    return kOk;
}

// --- dbar-demo ----------------------------------------------------------------

struct DbarArgs {
    unsigned K = 10;
    unsigned N = 12;
    std::string output;
};

int run_dbar(const DbarArgs &a)
{
    require_writable(a.output);
    const auto cr = DiffOperator::constant(2, a.N, {{MultiIndex{1, 0}, Scalar(1)}, {MultiIndex{0, 1}, Scalar::i()}});
    SolverConfig cfg;
    cfg.trunc_degree = a.N;
    CertificateOptions opts;
    opts.threads = thread_cap();
    const auto cert = build_certificate(cr, a.K, cfg, opts);
    const auto cls = classify_solution(cert.G);
    std::cout << "G for d_x + i d_y (K = " << a.K << ", N = " << a.N << "): " << to_string(cls) << "\n";
    const WirtingerJet g1 = wirtinger(cert.G);
    const WirtingerJet F = multidim_G(g1, 2);
    const auto form = dbar_apply(to_real(F));
    std::cout << "F(z1, z2) = G(z1) + G(z2): dbar components zero: " << (form.is_zero() ? "yes" : "no") << "\n";
    write_text(a.output.empty() ? "-" : a.output,
               json{{"classification", to_string(cls)}, {"G_wirtinger", to_json(g1.jet())}, {"F_wirtinger", to_json(F.jet())}}.dump(2)
                   + "\n");
    return std::holds_alternative<FormallyHolomorphic>(cls) && form.is_zero() ? kOk : kInvariant;
}

// --- ode1d ----------------------------------------------------------------------

int run_ode(const std::string &path)
{
    const OdeProblem p = parse_ode_file(path);
    const Jet f = ode_jet_solve(p);
    const Jet residual = ode_apply(p, f) - truncate(p.data, p.trunc_degree - p.order);
    std::cout << json{{"trunc_degree", f.trunc_degree()}, {"f", to_json(f)}}.dump(2) << "\n";
    return residual.is_zero() ? kOk : kInvariant;
}

// --- cauchy-demo --------------------------------------------------------------

struct CauchyArgs {
    unsigned resolution = 256;
    double tol = 1e-6;
    double amplitude = 1.0;
    std::string csv;
    unsigned grid = 41;
};

int run_cauchy(const CauchyArgs &a)
{
    require_writable(a.csv);
    demo::AnnulusDatum d;
    d.resolution = a.resolution;
    d.amplitude = a.amplitude;
    try {
        d.validate();
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    const auto report = demo::support_demo(d);
    std::cout << demo::format_report(report);
    const auto checked = demo::cauchy_transform_checked(d, 0.0, a.tol);
    std::cout << "refinement gap at 0  = " << checked.refinement_gap << (checked.resolved ? " (resolved)" : " (NOT resolved)")
              << "\n";
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        out << "x,y,re_u,im_u\n";
        out.precision(12);
        for (const auto &s : demo::sample_grid(d, a.grid, 2.5))
            out << s.x << ',' << s.y << ',' << s.u.real() << ',' << s.u.imag() << '\n';
        if (!out)
            throw InputError("cannot write " + a.csv);
    }
    return report.u0_nonzero && checked.resolved ? kOk : kInvariant;
}

// --- bench ------------------------------------------------------------------------

struct BenchArgs {
    unsigned dim = 2;
    unsigned N = 16;
    unsigned reps = 5;
};

int run_bench(const BenchArgs &a)
{
    // dense jets with non-trivial rational coefficients
    auto dense = [&](long salt) {
        Jet j(a.dim, a.N);
        std::vector<MultiIndex> stack{MultiIndex(a.dim)};
        long counter = salt;
        std::function<void(MultiIndex, std::size_t, unsigned)> fill = [&](MultiIndex m, std::size_t var, unsigned left) {
            if (var == a.dim) {
                ++counter;
                j.add_term(m, Scalar(Rational(Integer(counter % 17 - 8), Integer(counter % 5 + 1)),
                                     Rational(Integer(counter % 3), Integer(7))));
                return;
            }
            for (unsigned e = 0; e <= left; ++e) {
                m[var] = e;
                fill(m, var + 1, left - e);
            }
        };
        fill(MultiIndex(a.dim), 0, a.N);
        return j;
    };
    const Jet x = dense(1), y = dense(2);
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    std::size_t terms = 0;
    for (unsigned r = 0; r < a.reps; ++r) {
        const auto t0 = clock::now();
        const Jet p = mul(x, y);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        best = std::min(best, ms);
        terms = p.size();
    }
    std::cout << "truncated product, dim " << a.dim << ", N " << a.N << ": " << x.size() << " x " << y.size() << " terms -> "
              << terms << " terms, best of " << a.reps << ": " << best << " ms\n";
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact jets of flat germs: elliptic solution towers, divergence certificates and demos"};
    app.require_subcommand(1);

    CheckArgs check;
    auto *c = app.add_subcommand("check", "ellipticity sample and canonical form of an operator");
    c->add_option("operator", check.op, "operator JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--samples", check.samples, "grid samples per axis")->check(CLI::Range(2u, 1000u));

    UkArgs uk;
    auto *u = app.add_subcommand("uk", "solve L u = 0 with u = p_k on x_n = 0");
    u->add_option("operator", uk.op, "operator JSON (default: 2-D Laplacian)")->check(CLI::ExistingFile);
    u->add_option("--k", uk.k, "degree of p_k")->required();
    u->add_option("--N", uk.N, "truncation degree")->required();
    u->add_option("--pk", uk.pk, "'default' (x_1^k) or a JSON file with jet terms");
    u->add_option("-o,--output", uk.output, "write u_k here instead of stdout");
    u->add_option("--trace", uk.trace, "write the recursion trace here");

    CertifyArgs cert;
    auto *ce = app.add_subcommand("certify", "build and write a divergence certificate");
    ce->add_option("operator", cert.op, "operator JSON")->required()->check(CLI::ExistingFile);
    ce->add_option("--K", cert.K, "number of solutions u_1..u_K")->required();
    ce->add_option("--N", cert.N, "truncation degree")->required();
    ce->add_option("-o,--output", cert.output, "certificate path (stdout when omitted)");
    ce->add_flag("--normalize", cert.normalize, "scale p_k so the majorant of L p_k is <= 1");

    DbarArgs dbar;
    auto *d = app.add_subcommand("dbar-demo", "Cauchy-Riemann certificate, classification, two-variable lift");
    d->add_option("--K", dbar.K, "number of solutions")->required();
    d->add_option("--N", dbar.N, "truncation degree")->required();
    d->add_option("-o,--output", dbar.output, "JSON output path (stdout when omitted)");

    std::string ode_path;
    auto *o = app.add_subcommand("ode1d", "jet of the zero-Cauchy-data solution of a linear ODE");
    o->add_option("problem", ode_path, "problem JSON")->required()->check(CLI::ExistingFile);

    CauchyArgs cauchy;
    auto *ca = app.add_subcommand("cauchy-demo", "Cauchy transform of an annulus-supported datum");
    ca->add_option("--resolution", cauchy.resolution, "quadrature nodes per direction")->check(CLI::Range(16u, 1u << 14));
    ca->add_option("--tol", cauchy.tol, "refinement tolerance")->check(CLI::PositiveNumber);
    ca->add_option("--amplitude", cauchy.amplitude, "bump amplitude")->check(CLI::PositiveNumber);
    ca->add_option("--csv", cauchy.csv, "write u on a grid over [-2.5, 2.5]^2");
    ca->add_option("--grid", cauchy.grid, "grid points per side for --csv")->check(CLI::Range(2u, 1000u));

    BenchArgs bench;
    auto *b = app.add_subcommand("bench", "truncated series product microbenchmark");
    b->add_option("--dim", bench.dim)->check(CLI::Range(1u, 6u));
    b->add_option("--N", bench.N)->check(CLI::Range(0u, 64u));
    b->add_option("--reps", bench.reps)->check(CLI::Range(1u, 1000u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*c)
            return run_check(check);
        if (*u)
            return run_uk(uk);
        if (*ce)
            return run_certify(cert);
        if (*d)
            return run_dbar(dbar);
        if (*o)
            return run_ode(ode_path);
        if (*ca)
            return run_cauchy(cauchy);
        if (*b)
            return run_bench(bench);
    } catch (const InvariantViolation &e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kInvariant;
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
