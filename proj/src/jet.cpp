#include "flatjet/jet.hpp"

#include "flatjet/errors.hpp"

#include <algorithm>
#include <sstream>

namespace flatjet {

namespace {

void require_same_dim(const Jet &a, const Jet &b, const char *what)
{
    if (a.dim() != b.dim())
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs "
                         + std::to_string(b.dim()) + ")");
}

void require_index_dim(const Jet &a, const MultiIndex &gamma)
{
    if (gamma.dim() != a.dim())
        throw InputError("multi-index " + gamma.str() + " does not match jet dimension " + std::to_string(a.dim()));
}

} // namespace

Jet::Jet(std::size_t dim, unsigned trunc_degree) : dim_(dim), trunc_(trunc_degree)
{
    if (dim == 0)
        throw InputError("jet dimension must be at least 1");
}

Jet Jet::constant(std::size_t dim, unsigned trunc_degree, const Scalar &c)
{
    Jet j(dim, trunc_degree);
    j.add_term(MultiIndex(dim), c);
    return j;
}

Jet Jet::monomial(std::size_t dim, unsigned trunc_degree, const MultiIndex &gamma, const Scalar &c)
{
    Jet j(dim, trunc_degree);
    j.add_term(gamma, c);
    return j;
}

Jet Jet::variable(std::size_t dim, unsigned trunc_degree, std::size_t var)
{
    return monomial(dim, trunc_degree, MultiIndex::unit(dim, var));
}

Scalar Jet::coeff(const MultiIndex &gamma) const
{
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Jet::add_term(const MultiIndex &gamma, const Scalar &c)
{
    require_index_dim(*this, gamma);
    if (c.is_zero() || gamma.degree() > trunc_)
        return;
    auto [it, inserted] = terms_.try_emplace(gamma, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Jet Jet::operator-() const
{
    Jet r = *this;
    for (auto &[gamma, c] : r.terms_)
        c = -c;
    return r;
}

Jet &Jet::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[gamma, v] : terms_)
        v *= c;
    return *this;
}

Jet operator+(const Jet &a, const Jet &b)
{
    std::vector<JetTerm> t{{Scalar(1), a}, {Scalar(1), b}};
    return linear_combination(t);
}

Jet operator-(const Jet &a, const Jet &b)
{
    std::vector<JetTerm> t{{Scalar(1), a}, {Scalar(-1), b}};
    return linear_combination(t);
}

Jet operator*(const Jet &a, const Jet &b) { return mul(a, b); }

Jet linear_combination(std::span<const JetTerm> terms, std::size_t dim, unsigned trunc_degree)
{
    unsigned trunc = trunc_degree;
    for (const auto &[c, j] : terms) {
        if (j.dim() != dim)
            throw InputError("linear_combination: dimension mismatch (" + std::to_string(j.dim()) + " vs "
                             + std::to_string(dim) + ")");
        trunc = std::min(trunc, j.trunc_degree());
    }
    Jet r(dim, trunc);
    for (const auto &[c, j] : terms) {
        if (c.is_zero())
            continue;
        for (const auto &[gamma, v] : j)
            r.add_term(gamma, c * v);
    }
    return r;
}

Jet linear_combination(std::span<const JetTerm> terms)
{
    if (terms.empty())
        throw InputError("linear_combination: empty term list has no shape");
    const auto &first = terms.front().second;
    return linear_combination(terms, first.dim(), first.trunc_degree());
}

Jet mul(const Jet &a, const Jet &b)
{
    require_same_dim(a, b, "mul");
    const unsigned trunc = std::min(a.trunc_degree(), b.trunc_degree());
    Jet r(a.dim(), trunc);
    for (const auto &[ga, ca] : a) {
        const unsigned da = ga.degree();
        if (da > trunc)
            break; // graded order: everything after is higher degree
        for (const auto &[gb, cb] : b) {
            if (da + gb.degree() > trunc)
                break;
            r.add_term(ga + gb, ca * cb);
        }
    }
    return r;
}

Jet derive(const Jet &a, const MultiIndex &alpha)
{
    require_index_dim(a, alpha);
    const unsigned order = alpha.degree();
    if (order > a.trunc_degree())
        throw ReliabilityExhausted("derivative of order " + std::to_string(order) + " exceeds truncation degree "
                                   + std::to_string(a.trunc_degree()));
    Jet r(a.dim(), a.trunc_degree() - order);
    for (const auto &[gamma, c] : a) {
        if (!gamma.dominates(alpha))
            continue;
        Integer factor = 1;
        MultiIndex reduced = gamma;
        for (std::size_t i = 0; i < alpha.dim(); ++i)
            for (unsigned t = 0; t < alpha[i]; ++t)
                factor *= reduced[i]--;
        r.add_term(reduced, c * Scalar(factor));
    }
    return r;
}

Scalar eval(const Jet &a, std::span<const Scalar> point)
{
    if (point.size() != a.dim())
        throw InputError("eval: point has " + std::to_string(point.size()) + " coordinates, jet dimension is "
                         + std::to_string(a.dim()));
    // powers[i][e] = point[i]^e, grown on demand
    std::vector<std::vector<Scalar>> powers(a.dim(), std::vector<Scalar>{Scalar(1)});
    Scalar sum;
    for (const auto &[gamma, c] : a) {
        Scalar term = c;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            auto &p = powers[i];
            while (p.size() <= gamma[i])
                p.push_back(p.back() * point[i]);
            term *= p[gamma[i]];
        }
        sum += term;
    }
    return sum;
}

std::optional<unsigned> ord(const Jet &a)
{
    if (a.is_zero())
        return std::nullopt;
    return a.begin()->first.degree();
}

std::optional<unsigned> max_degree(const Jet &a)
{
    if (a.is_zero())
        return std::nullopt;
    return a.terms().rbegin()->first.degree();
}

std::optional<unsigned> last_variable_order(const Jet &a)
{
    std::optional<unsigned> best;
    for (const auto &[gamma, c] : a)
        if (!best || gamma.last() < *best)
            best = gamma.last();
    return best;
}

bool is_homogeneous(const Jet &a, unsigned k)
{
    return std::all_of(a.begin(), a.end(), [k](const auto &t) { return t.first.degree() == k; });
}

Jet restrict_last_zero(const Jet &a)
{
    Jet r(a.dim(), a.trunc_degree());
    for (const auto &[gamma, c] : a)
        if (gamma.last() == 0)
            r.add_term(gamma, c);
    return r;
}

Jet reciprocal(const Jet &a)
{
    const Scalar a0 = a.coeff(MultiIndex(a.dim()));
    if (a0.is_zero())
        throw InputError("reciprocal: constant term is zero, jet is not invertible");
    // 1/a = (1/a0) * sum_j h^j with h = 1 - a/a0, ord(h) >= 1
    const Scalar inv0 = Scalar(1) / a0;
    Jet h = -(inv0 * a);
    h.add_term(MultiIndex(a.dim()), Scalar(1));
    Jet sum = Jet::constant(a.dim(), a.trunc_degree(), Scalar(1));
    Jet power = sum;
    for (unsigned j = 1; j <= a.trunc_degree() && !h.is_zero(); ++j) {
        power = mul(power, h);
        if (power.is_zero())
            break;
        sum = sum + power;
    }
    return inv0 * sum;
}

Jet substitute_linear(const Jet &a, const ScalarMatrix &m)
{
    const auto n = a.dim();
    if (m.size() != n)
        throw InputError("substitute_linear: matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size())
                         + ", jet dimension is " + std::to_string(n));
    if (determinant(m).is_zero())
        throw InputError("substitute_linear: singular matrix");

    // images[i][e] = (sum_j m(i,j) y_j)^e; linear forms keep total degree.
    std::vector<std::vector<Jet>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        Jet form(n, a.trunc_degree());
        for (std::size_t j = 0; j < n; ++j)
            form.add_term(MultiIndex::unit(n, j), m(i, j));
        images[i].push_back(Jet::constant(n, a.trunc_degree(), Scalar(1)));
        images[i].push_back(std::move(form));
    }
    Jet r(n, a.trunc_degree());
    for (const auto &[gamma, c] : a) {
        Jet term = Jet::constant(n, a.trunc_degree(), c);
        for (std::size_t i = 0; i < n; ++i) {
            auto &pw = images[i];
            while (pw.size() <= gamma[i])
                pw.push_back(mul(pw.back(), pw[1]));
            if (gamma[i])
                term = mul(term, pw[gamma[i]]);
        }
        for (const auto &[g, v] : term)
            r.add_term(g, v);
    }
    return r;
}

Jet truncate(const Jet &a, unsigned trunc_degree)
{
    if (trunc_degree > a.trunc_degree())
        throw ReliabilityExhausted("truncate: cannot raise truncation from " + std::to_string(a.trunc_degree())
                                   + " to " + std::to_string(trunc_degree));
    Jet r(a.dim(), trunc_degree);
    for (const auto &[gamma, c] : a)
        r.add_term(gamma, c);
    return r;
}

Jet with_trunc_degree(const Jet &a, unsigned trunc_degree)
{
    Jet r(a.dim(), trunc_degree);
    for (const auto &[gamma, c] : a)
        r.add_term(gamma, c);
    return r;
}

std::string to_string(const Jet &a)
{
    std::ostringstream os;
    if (a.is_zero())
        os << "0";
    bool first = true;
    for (const auto &[gamma, c] : a) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c << ')';
        for (std::size_t i = 0; i < gamma.dim(); ++i)
            if (gamma[i])
                os << "*x" << (i + 1) << (gamma[i] > 1 ? "^" + std::to_string(gamma[i]) : "");
    }
    os << " + O(" << (a.trunc_degree() + 1) << ")";
    return os.str();
}

} // namespace flatjet
