#include "flatjet/ode1d.hpp"

#include "flatjet/errors.hpp"

namespace flatjet {

void OdeProblem::validate() const
{
    if (order == 0)
        throw InputError("ode: order must be positive");
    if (coefficients.size() != order)
        throw InputError("ode: expected " + std::to_string(order) + " coefficients, got "
                         + std::to_string(coefficients.size()));
    if (trunc_degree < order)
        throw InputError("ode: truncation degree below the order");
    auto check = [&](const Jet &j, const std::string &what) {
        if (j.dim() != 1)
            throw InputError("ode: " + what + " must be one-dimensional");
        if (j.trunc_degree() != trunc_degree)
            throw InputError("ode: " + what + " has truncation degree " + std::to_string(j.trunc_degree()));
    };
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        check(coefficients[i], "a_" + std::to_string(i));
    check(data, "data");
}

Jet ode_jet_solve(const OdeProblem &p)
{
    p.validate();
    const unsigned n = p.order;
    const unsigned N = p.trunc_degree;
    auto dense = [N](const Jet &j) {
        std::vector<Scalar> c(N + 1);
        for (const auto &[gamma, v] : j)
            c[gamma[0]] = v;
        return c;
    };
    const std::vector<Scalar> g = dense(p.data);
    std::vector<std::vector<Scalar>> a;
    for (const auto &c : p.coefficients)
        a.push_back(dense(c));

    // f_0 .. f_{n-1} = 0 (Cauchy data). Degree r of the right-hand side only
    // touches f_s with s <= r + n - 1, so f_{r+n} follows from known values.
    std::vector<Scalar> f(N + 1);
    for (unsigned r = 0; r + n <= N; ++r) {
        Scalar rhs = g[r];
        for (unsigned j = 0; j < n; ++j) {
            // [x^r] a_j * f^(j) = sum_{i <= r} a_j[i] * [x^{r-i}] f^(j)
            for (unsigned i = 0; i <= r; ++i) {
                if (a[j][i].is_zero())
                    continue;
                const unsigned s = r - i + j;
                if (f[s].is_zero())
                    continue;
                Integer falling = 1;
                for (unsigned t = 0; t < j; ++t)
                    falling *= s - t;
                rhs -= a[j][i] * f[s] * Scalar(falling);
            }
        }
        Integer falling = 1;
        for (unsigned t = 0; t < n; ++t)
            falling *= r + n - t;
        f[r + n] = rhs / Scalar(falling);
    }
    Jet out(1, N);
    for (unsigned d = 0; d <= N; ++d)
        out.add_term(MultiIndex{d}, f[d]);
    return out;
}

Jet ode_apply(const OdeProblem &p, const Jet &f)
{
    p.validate();
    std::vector<JetTerm> parts{{Scalar(1), derive(f, MultiIndex{p.order})}};
    for (unsigned j = 0; j < p.order; ++j)
        parts.emplace_back(Scalar(1), mul(p.coefficients[j], derive(f, MultiIndex{j})));
    return linear_combination(parts, 1, f.trunc_degree() - p.order);
}

} // namespace flatjet
