#include "flatjet/dbar.hpp"

#include "flatjet/errors.hpp"

namespace flatjet {

namespace {

void require_even(std::size_t dim)
{
    if (dim % 2 != 0)
        throw InputError("complex coordinates need an even number of real variables, got " + std::to_string(dim));
}

} // namespace

WirtingerJet::WirtingerJet(Jet jet) : jet_(std::move(jet)) { require_even(jet_.dim()); }

bool ZeroOneForm::is_zero() const
{
    for (const auto &c : components)
        if (!c.is_zero())
            return false;
    return true;
}

bool ZeroOneForm::is_closed() const
{
    for (std::size_t j = 0; j < components.size(); ++j)
        for (std::size_t k = j + 1; k < components.size(); ++k) {
            if (components[j].trunc_degree() < 1 || components[k].trunc_degree() < 1)
                continue;
            Jet a = dbar_component(components[j], k);
            Jet b = dbar_component(components[k], j);
            const unsigned t = std::min(a.trunc_degree(), b.trunc_degree());
            if (truncate(a, t) != truncate(b, t))
                return false;
        }
    return true;
}

ScalarMatrix real_to_wirtinger(std::size_t complex_dim)
{
    ScalarMatrix m(2 * complex_dim);
    const Scalar half = Scalar::ratio(1, 2);
    const Scalar i_half = Scalar::i() * half;
    for (std::size_t j = 0; j < complex_dim; ++j) {
        const auto x = 2 * j, y = 2 * j + 1;
        m(x, x) = half;
        m(x, y) = half;
        m(y, x) = -i_half;
        m(y, y) = i_half;
    }
    return m;
}

ScalarMatrix wirtinger_to_real(std::size_t complex_dim)
{
    ScalarMatrix m(2 * complex_dim);
    for (std::size_t j = 0; j < complex_dim; ++j) {
        const auto z = 2 * j, zb = 2 * j + 1;
        m(z, z) = Scalar(1);
        m(z, zb) = Scalar::i();
        m(zb, z) = Scalar(1);
        m(zb, zb) = -Scalar::i();
    }
    return m;
}

WirtingerJet wirtinger(const Jet &f)
{
    require_even(f.dim());
    return WirtingerJet(substitute_linear(f, real_to_wirtinger(f.dim() / 2)));
}

Jet to_real(const WirtingerJet &f)
{
    return substitute_linear(f.jet(), wirtinger_to_real(f.complex_dim()));
}

bool is_formally_holomorphic(const WirtingerJet &f)
{
    for (const auto &[gamma, c] : f.jet())
        for (std::size_t v = 1; v < gamma.dim(); v += 2)
            if (gamma[v] != 0)
                return false;
    return true;
}

Jet dbar_component(const Jet &f, std::size_t j)
{
    require_even(f.dim());
    const auto n = f.dim();
    std::vector<JetTerm> parts{{Scalar(1), derive(f, MultiIndex::unit(n, 2 * j))},
                               {Scalar::i(), derive(f, MultiIndex::unit(n, 2 * j + 1))}};
    return linear_combination(parts);
}

ZeroOneForm dbar_apply(const Jet &f)
{
    require_even(f.dim());
    ZeroOneForm form;
    for (std::size_t j = 0; j < f.dim() / 2; ++j)
        form.components.push_back(dbar_component(f, j));
    if (!form.is_closed())
        throw InvariantViolation("dbar f is not closed, which is impossible for an exact jet");
    return form;
}

SolutionClass classify_solution(const Jet &f)
{
    if (f.is_zero())
        return Flat{};
    const WirtingerJet w = wirtinger(f);
    for (const auto &[gamma, c] : w.jet())
        for (std::size_t v = 1; v < gamma.dim(); v += 2)
            if (gamma[v] != 0)
                return Mixed{gamma.degree()}; // graded order: first hit is lowest
    return FormallyHolomorphic{};
}

std::string to_string(const SolutionClass &c)
{
    if (std::holds_alternative<Flat>(c))
        return "flat";
    if (std::holds_alternative<FormallyHolomorphic>(c))
        return "formally_holomorphic";
    return "mixed(" + std::to_string(std::get<Mixed>(c).order) + ")";
}

WirtingerJet multidim_G(const WirtingerJet &G1, std::size_t n)
{
    if (G1.complex_dim() != 1)
        throw InputError("multidim_G: expected a jet in one complex variable");
    if (!is_formally_holomorphic(G1))
        throw InputError("multidim_G: input is not formally holomorphic");
    if (n == 0)
        throw InputError("multidim_G: need at least one complex variable");

    Jet F(2 * n, G1.jet().trunc_degree());
    for (std::size_t j = 0; j < n; ++j)
        for (const auto &[gamma, c] : G1.jet())
            F.add_term(MultiIndex::unit(2 * n, 2 * j, gamma[0]), c);
    WirtingerJet result(std::move(F));

    if (!is_formally_holomorphic(result))
        throw InvariantViolation("multidim_G: result contains barred variables");
    if (result.jet().trunc_degree() >= 1 && !dbar_apply(to_real(result)).is_zero())
        throw InvariantViolation("multidim_G: dbar of the result is not zero");
    for (const auto &[gamma, c] : G1.jet())
        if (gamma[0] > 0 && result.jet().coeff(MultiIndex::unit(2 * n, 0, gamma[0])) != c)
            throw InvariantViolation("multidim_G: z_1 coefficients differ from G1");
    return result;
}

} // namespace flatjet
