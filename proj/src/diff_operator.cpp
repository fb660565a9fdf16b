#include "flatjet/diff_operator.hpp"

#include "flatjet/errors.hpp"

namespace flatjet {

DiffOperator::DiffOperator(std::size_t dim, unsigned order, unsigned trunc_degree, Terms terms)
    : dim_(dim), order_(order), trunc_(trunc_degree), terms_()
{
    if (dim == 0)
        throw InputError("operator dimension must be at least 1");
    bool has_principal = false;
    for (auto &[alpha, a] : terms) {
        if (alpha.dim() != dim)
            throw InputError("term " + alpha.str() + " has length " + std::to_string(alpha.dim())
                             + ", operator dimension is " + std::to_string(dim));
        if (alpha.degree() > order)
            throw InputError("term " + alpha.str() + " exceeds operator order " + std::to_string(order));
        if (a.dim() != dim)
            throw InputError("coefficient of " + alpha.str() + " has dimension " + std::to_string(a.dim()));
        if (a.trunc_degree() != trunc_degree)
            throw InputError("coefficient of " + alpha.str() + " has truncation degree "
                             + std::to_string(a.trunc_degree()) + ", operator uses " + std::to_string(trunc_degree));
        if (a.is_zero())
            continue;
        if (alpha.degree() == order)
            has_principal = true;
        terms_.emplace(alpha, std::move(a));
    }
    if (!has_principal)
        throw InputError("operator has no nonzero coefficient of order " + std::to_string(order));
}

DiffOperator DiffOperator::constant(std::size_t dim, unsigned trunc_degree,
                                    const std::vector<std::pair<MultiIndex, Scalar>> &terms)
{
    Terms t;
    unsigned order = 0;
    for (const auto &[alpha, c] : terms) {
        order = std::max(order, alpha.degree());
        auto [it, inserted] = t.try_emplace(alpha, Jet(dim, trunc_degree));
        it->second.add_term(MultiIndex(dim), c);
    }
    return DiffOperator(dim, order, trunc_degree, std::move(t));
}

Jet DiffOperator::coeff(const MultiIndex &alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Jet(dim_, trunc_) : it->second;
}

namespace {

Jet apply_terms(const DiffOperator::Terms &terms, std::size_t dim, unsigned order, const Jet &f)
{
    if (f.dim() != dim)
        throw InputError("apply: operator dimension " + std::to_string(dim) + ", jet dimension "
                         + std::to_string(f.dim()));
    if (f.trunc_degree() < order)
        throw ReliabilityExhausted("apply: order " + std::to_string(order) + " operator on a jet truncated at "
                                   + std::to_string(f.trunc_degree()));
    std::vector<JetTerm> parts;
    parts.reserve(terms.size());
    for (const auto &[alpha, a] : terms)
        parts.emplace_back(Scalar(1), mul(a, derive(f, alpha)));
    unsigned trunc = f.trunc_degree() - order;
    for (const auto &[alpha, a] : terms)
        trunc = std::min(trunc, a.trunc_degree());
    return linear_combination(parts, dim, trunc);
}

} // namespace

Jet apply(const DiffOperator &op, const Jet &f)
{
    return apply_terms(op.terms(), op.dim(), op.order(), f);
}

DiffOperator scale(const DiffOperator &op, const Scalar &c)
{
    if (c.is_zero())
        throw InputError("scale: zero factor would remove the principal part");
    DiffOperator::Terms t;
    for (const auto &[alpha, a] : op.terms())
        t.emplace(alpha, c * a);
    return DiffOperator(op.dim(), op.order(), op.trunc_degree(), std::move(t));
}

CanonicalOperator canonical_form(const DiffOperator &op)
{
    const auto n = op.dim();
    const auto m = op.order();
    const MultiIndex beta = MultiIndex::unit(n, n - 1, m);
    const Jet a_beta = op.coeff(beta);
    if (a_beta.coeff(MultiIndex(n)).is_zero())
        throw InputError("operator not in elliptic position: coefficient of D^" + beta.str()
                         + " vanishes at the origin");
    const Jet inv = reciprocal(a_beta);
    CanonicalOperator canon{n, m, beta, {}, a_beta};
    for (const auto &[alpha, a] : op.terms()) {
        if (alpha == beta)
            continue;
        Jet r = -mul(a, inv);
        if (!r.is_zero())
            canon.remainder.emplace(alpha, std::move(r));
    }
    return canon;
}

Jet apply(const CanonicalOperator &canon, const Jet &f)
{
    if (f.dim() != canon.dim)
        throw InputError("apply: canonical operator dimension mismatch");
    Jet lead = derive(f, canon.beta);
    if (canon.remainder.empty())
        return lead;
    Jet rest = apply_terms(canon.remainder, canon.dim, canon.order, f);
    return lead - rest;
}

DiffOperator reconstruct(const CanonicalOperator &canon)
{
    DiffOperator::Terms t;
    t.emplace(canon.beta, canon.leading);
    unsigned trunc = canon.leading.trunc_degree();
    for (const auto &[alpha, r] : canon.remainder)
        t.emplace(alpha, -mul(canon.leading, r));
    for (auto &[alpha, a] : t)
        trunc = std::min(trunc, a.trunc_degree());
    for (auto &[alpha, a] : t)
        a = truncate(a, trunc);
    return DiffOperator(canon.dim, canon.order, trunc, std::move(t));
}

Scalar principal_symbol_at_origin(const DiffOperator &op, std::span<const Scalar> xi)
{
    if (xi.size() != op.dim())
        throw InputError("principal symbol: direction has wrong length");
    Scalar sum;
    for (const auto &[alpha, a] : op.terms()) {
        if (alpha.degree() != op.order())
            continue;
        Scalar term = a.coeff(MultiIndex(op.dim()));
        for (std::size_t i = 0; i < xi.size(); ++i)
            term *= xi[i].pow(alpha[i]);
        sum += term;
    }
    return sum;
}

std::vector<std::vector<Scalar>> sphere_directions(std::size_t dim, unsigned samples_per_axis)
{
    if (samples_per_axis < 2)
        throw InputError("ellipticity check needs at least 2 samples per axis");
    std::vector<std::vector<Scalar>> out;
    if (dim == 1) {
        out.push_back({Scalar(1)});
        out.push_back({Scalar(-1)});
        return out;
    }
    const long s = samples_per_axis;
    const std::size_t k = dim - 1;
    std::vector<long> j(k, -s);
    for (;;) {
        // u in R^{n-1} -> ((2u) / (|u|^2 + 1), (|u|^2 - 1) / (|u|^2 + 1))
        Rational norm2 = 0;
        std::vector<Rational> u(k);
        for (std::size_t i = 0; i < k; ++i) {
            u[i] = Rational(Integer(j[i]), Integer(s));
            u[i].canonicalize();
            norm2 += u[i] * u[i];
        }
        const Rational den = norm2 + 1;
        std::vector<Scalar> xi;
        xi.reserve(dim);
        for (std::size_t i = 0; i < k; ++i)
            xi.emplace_back(Rational(2 * u[i] / den));
        xi.emplace_back(Rational((norm2 - 1) / den));
        out.push_back(std::move(xi));

        std::size_t pos = 0;
        while (pos < k && j[pos] == s)
            j[pos++] = -s;
        if (pos == k)
            break;
        ++j[pos];
    }
    std::vector<Scalar> pole(dim, Scalar(0));
    pole.back() = Scalar(1);
    out.push_back(std::move(pole));
    return out;
}

EllipticityReport ellipticity_check(const DiffOperator &op, unsigned samples_per_axis)
{
    EllipticityReport report;
    report.directions = sphere_directions(op.dim(), samples_per_axis);
    for (const auto &xi : report.directions) {
        Scalar v = principal_symbol_at_origin(op, xi);
        if (v.is_zero() && !report.failed_direction)
            report.failed_direction = xi;
        report.symbol_values.push_back(std::move(v));
    }
    return report;
}

} // namespace flatjet
