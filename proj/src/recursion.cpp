#include "flatjet/recursion.hpp"

#include "flatjet/errors.hpp"

namespace flatjet {

unsigned SolverConfig::iteration_cap(unsigned order) const
{
    if (max_iterations)
        return *max_iterations;
    return trunc_degree >= order ? trunc_degree - order + 2 : 2;
}

void SolverConfig::validate(std::size_t dim, unsigned order) const
{
    if (trunc_degree < order)
        throw InputError("truncation degree " + std::to_string(trunc_degree) + " is below the operator order "
                         + std::to_string(order));
    if (!radii.empty() && radii.size() != dim)
        throw InputError("expected " + std::to_string(dim) + " polydisc radii");
    for (const auto &r : radii)
        if (sgn(r) <= 0 || r >= 1)
            throw InputError("polydisc radius " + to_string(r) + " is not in (0, 1)");
}

Jet solve_dbeta(const Jet &rhs, unsigned m)
{
    const auto n = rhs.dim();
    Jet v(n, rhs.trunc_degree() + m);
    const MultiIndex beta = MultiIndex::unit(n, n - 1, m);
    for (const auto &[gamma, c] : rhs) {
        // gamma_n! / (gamma_n + m)! = 1 / ((gamma_n + 1) ... (gamma_n + m))
        Integer rising = 1;
        for (unsigned t = 1; t <= m; ++t)
            rising *= gamma.last() + t;
        v.add_term(gamma + beta, c / Scalar(rising));
    }
    return v;
}

namespace {

void require_boundary_polynomial(const Jet &p, std::size_t dim)
{
    if (p.dim() != dim)
        throw InputError("boundary polynomial has dimension " + std::to_string(p.dim()) + ", operator "
                         + std::to_string(dim));
    if (p.is_zero())
        throw InputError("boundary polynomial is zero");
    const unsigned k = p.begin()->first.degree();
    if (!is_homogeneous(p, k))
        throw InputError("boundary polynomial is not homogeneous");
    for (const auto &[gamma, c] : p)
        if (gamma.last() != 0)
            throw InputError("boundary polynomial depends on the last variable");
}

void require_degree_fits(const Jet &p, unsigned trunc_degree)
{
    if (p.begin()->first.degree() > trunc_degree)
        throw InputError("boundary polynomial degree exceeds truncation degree " + std::to_string(trunc_degree));
}

} // namespace

SolveTrace picard_iterate(const CanonicalOperator &canon, const Jet &p_k, const SolverConfig &cfg)
{
    cfg.validate(canon.dim, canon.order);
    require_boundary_polynomial(p_k, canon.dim);
    require_degree_fits(p_k, cfg.trunc_degree);
    const unsigned m = canon.order;
    const unsigned n_trunc = cfg.trunc_degree;
    const Jet p = with_trunc_degree(p_k, n_trunc);
    // D^beta p = 0 since p is free of x_n, so -L' p = sum r_alpha D^alpha p.
    const Jet forcing = -apply(canon, p);

    SolveTrace trace;
    trace.iterates.emplace_back(canon.dim, n_trunc);
    const unsigned cap = cfg.iteration_cap(m);
    for (unsigned nu = 0; nu < cap; ++nu) {
        const Jet &v = trace.iterates.back();
        Jet rhs = forcing;
        for (const auto &[alpha, r] : canon.remainder)
            rhs = rhs + mul(r, derive(v, alpha));
        Jet next = solve_dbeta(rhs, m);
        Jet w = next - v;
        const bool done = w.is_zero();
        trace.differences.push_back(std::move(w));
        trace.iterates.push_back(std::move(next));
        if (done) {
            trace.stabilized_at = nu;
            return trace;
        }
    }
    throw InvariantViolation("recursion did not stabilize within " + std::to_string(cap) + " iterations");
}

std::pair<Jet, SolveTrace> build_uk_traced(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg)
{
    const CanonicalOperator canon = canonical_form(op);
    SolveTrace trace = picard_iterate(canon, p_k, cfg);
    const unsigned k = p_k.begin()->first.degree();
    Jet u = with_trunc_degree(p_k, cfg.trunc_degree) + trace.solution();

    const Jet residual = apply(op, u);
    if (!residual.is_zero())
        throw InvariantViolation("L u_" + std::to_string(k) + " is not zero through degree "
                                 + std::to_string(residual.trunc_degree()) + ": " + to_string(residual));
    if (k <= u.trunc_degree() && ord(u) != k)
        throw InvariantViolation("u_" + std::to_string(k) + " does not vanish to order exactly " + std::to_string(k));
    if (restrict_last_zero(u) != with_trunc_degree(p_k, u.trunc_degree()))
        throw InvariantViolation("u_" + std::to_string(k) + " does not restrict to p_k on x_n = 0");
    return {std::move(u), std::move(trace)};
}

Jet build_uk(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg)
{
    return build_uk_traced(op, p_k, cfg).first;
}

Rational majorant_bound(const Jet &a, std::span<const Rational> radii)
{
    if (radii.size() != a.dim())
        throw InputError("majorant bound: need one radius per variable");
    Rational sum = 0;
    for (const auto &[gamma, c] : a) {
        Rational term = c.abs_bound();
        for (std::size_t i = 0; i < gamma.dim(); ++i)
            for (unsigned t = 0; t < gamma[i]; ++t)
                term *= radii[i];
        sum += term;
    }
    return sum;
}

Scalar normalization_factor(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg)
{
    if (!cfg.normalize)
        return Scalar(1);
    std::vector<Rational> radii = cfg.radii;
    if (radii.empty())
        radii.assign(op.dim(), Rational(1, 2));
    const Rational bound = majorant_bound(apply(op, with_trunc_degree(p_k, cfg.trunc_degree)), radii);
    if (bound <= 1)
        return Scalar(1);
    return Scalar(Rational(1 / bound));
}

} // namespace flatjet
