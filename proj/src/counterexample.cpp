#include "flatjet/counterexample.hpp"

#include "flatjet/errors.hpp"
#include "flatjet/io.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace flatjet {

Jet default_pk(unsigned k, std::size_t dim) { return default_pk(k, dim, k); }

Jet default_pk(unsigned k, std::size_t dim, unsigned trunc_degree)
{
    if (dim < 2)
        throw InputError("boundary polynomials need dimension >= 2");
    return Jet::monomial(dim, trunc_degree, MultiIndex::unit(dim, 0, k));
}

std::vector<Scalar> BairePoint::ambient_point(const Rational &t) const
{
    std::vector<Scalar> x;
    x.reserve(coords.size() + 1);
    for (const auto &c : coords)
        x.emplace_back(Rational(t * c));
    x.emplace_back(0);
    return x;
}

namespace {

// Visits j in {1..hi}^len with sum(j) == total in lexicographic order; stops
// as soon as `visit` returns true.
template <class Visit>
bool for_each_composition(std::vector<long> &j, std::size_t pos, long remaining, long hi, Visit &visit)
{
    const std::size_t len = j.size();
    if (pos + 1 == len) {
        if (remaining < 1 || remaining > hi)
            return false;
        j[pos] = remaining;
        return visit(j);
    }
    const long slots_after = static_cast<long>(len - pos - 1);
    for (long v = 1; v <= hi; ++v) {
        const long rest = remaining - v;
        if (rest < slots_after)
            break;
        if (rest > slots_after * hi)
            continue;
        j[pos] = v;
        if (for_each_composition(j, pos + 1, rest, hi, visit))
            return true;
    }
    return false;
}

template <class Fn>
auto run_stage(const char *name, Fn &&fn)
{
    try {
        return fn();
    } catch (const ReliabilityExhausted &e) {
        throw ReliabilityExhausted(std::string(name) + ": " + e.what());
    } catch (const InputError &e) {
        throw InputError(std::string(name) + ": " + e.what());
    } catch (const InvariantViolation &e) {
        throw InvariantViolation(std::string(name) + ": " + e.what());
    }
}

} // namespace

BairePoint baire_point(std::span<const Jet> p_list, unsigned denominator_hint)
{
    if (p_list.empty())
        throw InputError("baire_point: no polynomials");
    const std::size_t dim = p_list.front().dim();
    if (dim < 2)
        throw InputError("baire_point: dimension must be at least 2");
    unsigned total_degree = 0;
    for (const auto &p : p_list) {
        if (p.dim() != dim)
            throw InputError("baire_point: dimension mismatch");
        if (p.is_zero())
            throw InputError("baire_point: zero polynomial has no nonvanishing point");
        for (const auto &[gamma, c] : p)
            if (gamma.last() != 0)
                throw InputError("baire_point: polynomial depends on the last variable");
        total_degree += *max_degree(p);
    }
    const long D = std::max(total_degree, denominator_hint);
    const long hi = D + 1;
    const Integer den = D + 2;
    const std::size_t len = dim - 1;

    BairePoint found;
    auto visit = [&](const std::vector<long> &j) {
        BairePoint candidate;
        for (long v : j)
            candidate.coords.emplace_back(Integer(v), den);
        for (auto &c : candidate.coords)
            c.canonicalize();
        const auto x = candidate.ambient_point();
        for (const auto &p : p_list) {
            Scalar w = eval(p, x);
            if (w.is_zero())
                return false;
            candidate.witnesses.push_back(std::move(w));
        }
        found = std::move(candidate);
        return true;
    };
    std::vector<long> j(len, 1);
    for (long total = static_cast<long>(len); total <= static_cast<long>(len) * hi; ++total)
        if (for_each_composition(j, 0, total, hi, visit))
            return found;
    throw InvariantViolation("baire_point: grid exhausted, contradicting the degree bound");
}

Scalar compute_bk(const Jet &p_k, const BairePoint &x_bar, unsigned k)
{
    const Scalar w = eval(p_k, x_bar.ambient_point());
    if (w.is_zero())
        throw InputError("compute_bk: p_" + std::to_string(k) + " vanishes at the chosen point");
    return Scalar(factorial(k)) / w;
}

Jet assemble_G(std::span<const Jet> u_list, std::span<const Scalar> b_list, std::size_t dim, unsigned trunc_degree,
               unsigned first_k)
{
    if (u_list.size() != b_list.size())
        throw InputError("assemble_G: " + std::to_string(u_list.size()) + " solutions but "
                         + std::to_string(b_list.size()) + " weights");
    Jet G(dim, trunc_degree);
    for (std::size_t i = 0; i < u_list.size(); ++i) {
        const Jet &u = u_list[i];
        const unsigned k = first_k + static_cast<unsigned>(i);
        if (u.dim() != dim)
            throw InputError("assemble_G: dimension mismatch at k = " + std::to_string(k));
        if (u.trunc_degree() < trunc_degree)
            throw ReliabilityExhausted("assemble_G: u_" + std::to_string(k) + " is only reliable through degree "
                                       + std::to_string(u.trunc_degree()));
        // degree-j coefficients may only receive contributions from k <= j
        if (auto o = ord(u); o && *o < k)
            throw InvariantViolation("assemble_G: u_" + std::to_string(k) + " has order " + std::to_string(*o));
        for (const auto &[gamma, c] : u)
            G.add_term(gamma, b_list[i] * c);
    }
    return G;
}

Jet verify_flatness(const DiffOperator &op, const Jet &G) { return apply(op, G); }

DivergenceTable divergence_table(std::span<const Scalar> b_list, std::span<const Jet> p_list,
                                 const BairePoint &x_bar, std::span<const Rational> t_values)
{
    if (b_list.size() != p_list.size())
        throw InputError("divergence_table: lists are not aligned");
    DivergenceTable table;
    table.t_values.assign(t_values.begin(), t_values.end());

    DivergenceRow row0{0, Scalar(1), std::vector<Rational>(t_values.size(), Rational(1))};
    table.rows.push_back(row0);
    const auto base = x_bar.ambient_point();
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        DivergenceRow row;
        row.k = static_cast<unsigned>(i + 1);
        row.diagonal = b_list[i] * eval(p_list[i], base);
        const auto &prev = table.rows.back().partial_sums;
        for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
            const Scalar v = b_list[i] * eval(p_list[i], x_bar.ambient_point(t_values[ti]));
            if (!v.is_real())
                throw InvariantViolation("divergence_table: b_k p_k(t x) is not real at k = " + std::to_string(row.k));
            row.partial_sums.push_back(prev[ti] + abs(v.re()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<std::string> certificate_failures(const CounterexampleCertificate &cert)
{
    std::vector<std::string> out;
    if (!cert.residual.is_zero())
        out.push_back("residual L(G) is not the zero jet: " + to_string(cert.residual));
    if (cert.residual.trunc_degree() < cert.verified_through_degree)
        out.push_back("residual is only reliable through degree " + std::to_string(cert.residual.trunc_degree()));
    if (cert.diagonal.size() != cert.K)
        out.push_back("diagonal has " + std::to_string(cert.diagonal.size()) + " entries, expected "
                      + std::to_string(cert.K));
    for (std::size_t i = 0; i < cert.diagonal.size(); ++i)
        if (cert.diagonal[i] != Scalar(factorial(i + 1)))
            out.push_back("diagonal entry k = " + std::to_string(i + 1) + " is " + to_string(cert.diagonal[i]));
    if (cert.u_list.size() == cert.p_list.size())
        for (std::size_t i = 0; i < cert.u_list.size(); ++i)
            if (restrict_last_zero(cert.u_list[i]) != with_trunc_degree(cert.p_list[i], cert.u_list[i].trunc_degree()))
                out.push_back("u_" + std::to_string(i + 1) + " does not restrict to p_" + std::to_string(i + 1));
    if (!cert.diverges)
        out.push_back("divergence flag not set");
    return out;
}

CounterexampleCertificate build_certificate(const DiffOperator &op, unsigned K, const SolverConfig &cfg,
                                            const CertificateOptions &options)
{
    const std::size_t n = op.dim();
    const unsigned N = cfg.trunc_degree;
    if (K < 1)
        throw InputError("certificate needs K >= 1");
    if (K > N)
        throw InputError("certificate needs K <= N (got K = " + std::to_string(K) + ", N = " + std::to_string(N) + ")");

    CounterexampleCertificate cert;
    cert.operator_digest = operator_digest(op);
    cert.order = op.order();
    cert.K = K;
    cert.N = N;

    run_stage("ellipticity", [&] {
        const auto report = ellipticity_check(op, 4);
        if (!report.passed())
            throw InputError("principal symbol vanishes on a sampled direction");
        canonical_form(op);
        return 0;
    });

    run_stage("boundary polynomials", [&] {
        for (unsigned k = 1; k <= K; ++k) {
            Jet p = options.boundary ? options.boundary(k, n) : default_pk(k, n);
            if (cfg.normalize)
                p = normalization_factor(op, p, cfg) * p;
            cert.p_list.push_back(with_trunc_degree(p, N));
        }
        return 0;
    });

    cert.u_list = run_stage("solve", [&] {
        std::vector<Jet> u(K);
        const unsigned threads = std::max(1u, options.threads);
        for (unsigned start = 0; start < K; start += threads) {
            std::vector<std::future<Jet>> batch;
            const unsigned stop = std::min(K, start + threads);
            for (unsigned i = start; i < stop; ++i)
                batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                           [&, i] { return build_uk(op, cert.p_list[i], cfg); }));
            for (unsigned i = start; i < stop; ++i)
                u[i] = batch[i - start].get();
        }
        return u;
    });

    cert.baire = run_stage("baire point", [&] { return baire_point(cert.p_list, options.denominator_hint); });

    run_stage("weights", [&] {
        for (unsigned k = 1; k <= K; ++k)
            cert.b_list.push_back(compute_bk(cert.p_list[k - 1], cert.baire, k));
        return 0;
    });

    cert.G = run_stage("assemble", [&] { return assemble_G(cert.u_list, cert.b_list, n, N); });

    run_stage("flatness", [&] {
        // recomputed from G itself, not from sum b_k L(u_k)
        cert.residual = verify_flatness(op, cert.G);
        cert.verified_through_degree = N - op.order();
        return 0;
    });

    run_stage("divergence", [&] {
        cert.divergence = divergence_table(cert.b_list, cert.p_list, cert.baire, options.t_values);
        cert.diverges = true;
        for (std::size_t r = 1; r < cert.divergence.rows.size(); ++r) {
            const auto &row = cert.divergence.rows[r];
            cert.diagonal.push_back(row.diagonal);
            // b_k p_k(x_bar) = k! gives sum |t|^k k!, divergent for every t != 0
            cert.diverges = cert.diverges && row.diagonal == Scalar(factorial(row.k));
        }
        return 0;
    });

    run_stage("verification", [&] {
        const auto failures = certificate_failures(cert);
        if (!failures.empty())
            throw InvariantViolation(failures.front());
        return 0;
    });
    return cert;
}

} // namespace flatjet
