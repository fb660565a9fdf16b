#include "flatjet/io.hpp"

#include "flatjet/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace flatjet {

namespace {

const json &field(const json &j, const char *key, const std::string &where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

std::string string_field(const json &j, const std::string &where)
{
    if (!j.is_string())
        throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

unsigned natural(const json &j, const std::string &where)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw InputError(where + ": expected a non-negative integer");
    return j.get<unsigned>();
}

Rational rational_at(const json &j, const std::string &where)
{
    try {
        return parse_rational(string_field(j, where));
    } catch (const InputError &e) {
        throw InputError(where + ": " + e.what());
    }
}

MultiIndex index_from_json(const json &j, std::size_t dim, const std::string &where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array of exponents");
    if (j.size() != dim)
        throw InputError(where + ": has length " + std::to_string(j.size()) + " but the dimension is "
                         + std::to_string(dim));
    std::vector<MultiIndex::value_type> e;
    for (std::size_t i = 0; i < j.size(); ++i)
        e.push_back(natural(j[i], where + "[" + std::to_string(i) + "]"));
    return MultiIndex(std::move(e));
}

json index_to_json(const MultiIndex &m)
{
    json a = json::array();
    for (auto e : m.exponents())
        a.push_back(e);
    return a;
}

json rationals_to_json(const std::vector<Rational> &v)
{
    json a = json::array();
    for (const auto &q : v)
        a.push_back(to_string(q));
    return a;
}

std::vector<Rational> rationals_from_json(const json &j, const std::string &where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

template <class T, class Fn>
std::vector<T> list_from_json(const json &j, const std::string &where, Fn &&fn)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(fn(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

json to_json(const Scalar &s) { return json{{"re", to_string(s.re())}, {"im", to_string(s.im())}}; }

Scalar scalar_from_json(const json &j, const std::string &where)
{
    return Scalar(rational_at(field(j, "re", where), where + ".re"), rational_at(field(j, "im", where), where + ".im"));
}

Scalar parse_scalar(std::string_view text)
{
    if (text.empty())
        throw InputError("empty scalar");
    if (text.back() != 'i')
        return Scalar(parse_rational(text));
    std::string_view body = text.substr(0, text.size() - 1);
    // split at the last sign that is not the leading one
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    if (split == std::string_view::npos)
        return Scalar(Rational(0), parse_rational(body));
    return Scalar(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

json to_json(const Jet &a)
{
    json terms = json::array();
    for (const auto &[gamma, c] : a)
        terms.push_back(json{{"gamma", index_to_json(gamma)}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
    return terms;
}

Jet jet_from_json(const json &j, std::size_t dim, unsigned trunc_degree, const std::string &where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array of terms");
    Jet out(dim, trunc_degree);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const MultiIndex gamma = index_from_json(field(j[i], "gamma", at), dim, at + ".gamma");
        if (gamma.degree() > trunc_degree)
            throw InputError(at + ": monomial of degree " + std::to_string(gamma.degree())
                             + " exceeds truncation degree " + std::to_string(trunc_degree));
        if (!out.coeff(gamma).is_zero())
            throw InputError(at + ": duplicate monomial " + gamma.str());
        out.add_term(gamma, scalar_from_json(j[i], at));
    }
    return out;
}

json to_json(const DiffOperator &op)
{
    json terms = json::array();
    for (const auto &[alpha, a] : op.terms())
        terms.push_back(json{{"alpha", index_to_json(alpha)}, {"coeff", to_json(a)}});
    return json{{"dim", op.dim()}, {"order", op.order()}, {"trunc_degree", op.trunc_degree()}, {"terms", terms}};
}

DiffOperator operator_from_json(const json &j)
{
    const std::string root = "operator";
    const unsigned dim = natural(field(j, "dim", root), "operator.dim");
    const unsigned order = natural(field(j, "order", root), "operator.order");
    const unsigned trunc = natural(field(j, "trunc_degree", root), "operator.trunc_degree");
    if (dim == 0)
        throw InputError("operator.dim: must be at least 1");
    const json &terms = field(j, "terms", root);
    if (!terms.is_array())
        throw InputError("operator.terms: expected an array");
    DiffOperator::Terms t;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = "operator.terms[" + std::to_string(i) + "]";
        MultiIndex alpha = index_from_json(field(terms[i], "alpha", at), dim, at + ".alpha");
        if (alpha.degree() > order)
            throw InputError(at + ".alpha: |alpha| = " + std::to_string(alpha.degree()) + " exceeds order "
                             + std::to_string(order));
        Jet a = jet_from_json(field(terms[i], "coeff", at), dim, trunc, at + ".coeff");
        if (t.contains(alpha))
            throw InputError(at + ".alpha: duplicate term " + alpha.str());
        t.emplace(std::move(alpha), std::move(a));
    }
    return DiffOperator(dim, order, trunc, std::move(t));
}

json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

DiffOperator parse_operator_file(const std::filesystem::path &path)
{
    const json j = read_json_file(path);
    try {
        return operator_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string operator_digest(const DiffOperator &op)
{
    const std::string text = to_json(op).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json to_json(const SolveTrace &trace)
{
    json it = json::array(), diff = json::array();
    for (const auto &v : trace.iterates)
        it.push_back(json{{"trunc_degree", v.trunc_degree()}, {"terms", to_json(v)}});
    for (const auto &w : trace.differences)
        diff.push_back(json{{"trunc_degree", w.trunc_degree()}, {"terms", to_json(w)}});
    return json{{"stabilized_at", trace.stabilized_at}, {"iterates", it}, {"differences", diff}};
}

json to_json(const CounterexampleCertificate &cert)
{
    const std::size_t dim = cert.G.dim();
    json witnesses = json::array(), b = json::array(), diagonal = json::array(), p = json::array(),
         u = json::array();
    for (const auto &w : cert.baire.witnesses)
        witnesses.push_back(to_json(w));
    for (const auto &x : cert.b_list)
        b.push_back(to_json(x));
    for (const auto &d : cert.diagonal)
        diagonal.push_back(to_string(d));
    for (const auto &x : cert.p_list)
        p.push_back(to_json(x));
    for (const auto &x : cert.u_list)
        u.push_back(to_json(x));
    json rows = json::array();
    for (const auto &r : cert.divergence.rows)
        rows.push_back(json{{"k", r.k}, {"diagonal", to_string(r.diagonal)}, {"partial_sums", rationals_to_json(r.partial_sums)}});
    return json{
        {"operator_digest", cert.operator_digest},
        {"dim", dim},
        {"order", cert.order},
        {"K", cert.K},
        {"N", cert.N},
        {"baire", json{{"coords", rationals_to_json(cert.baire.coords)}, {"witnesses", witnesses}}},
        {"p", p},
        {"u", u},
        {"b", b},
        {"G", to_json(cert.G)},
        {"residual", to_json(cert.residual)},
        {"flatness", json{{"verified_through_degree", cert.verified_through_degree}, {"residual_is_zero", cert.residual.is_zero()}}},
        {"diagonal", diagonal},
        {"divergence", json{{"t", rationals_to_json(cert.divergence.t_values)}, {"rows", rows}}},
        {"diverges", cert.diverges},
    };
}

CounterexampleCertificate certificate_from_json(const json &j)
{
    const std::string root = "certificate";
    CounterexampleCertificate c;
    c.operator_digest = string_field(field(j, "operator_digest", root), "certificate.operator_digest");
    const unsigned dim = natural(field(j, "dim", root), "certificate.dim");
    c.order = natural(field(j, "order", root), "certificate.order");
    c.K = natural(field(j, "K", root), "certificate.K");
    c.N = natural(field(j, "N", root), "certificate.N");
    const json &flat = field(j, "flatness", root);
    c.verified_through_degree = natural(field(flat, "verified_through_degree", "certificate.flatness"),
                                        "certificate.flatness.verified_through_degree");

    const json &baire = field(j, "baire", root);
    c.baire.coords = rationals_from_json(field(baire, "coords", "certificate.baire"), "certificate.baire.coords");
    c.baire.witnesses = list_from_json<Scalar>(field(baire, "witnesses", "certificate.baire"),
                                               "certificate.baire.witnesses", scalar_from_json);
    auto jet_at = [&](unsigned trunc) {
        return [dim, trunc](const json &x, const std::string &w) { return jet_from_json(x, dim, trunc, w); };
    };
    c.p_list = list_from_json<Jet>(field(j, "p", root), "certificate.p", jet_at(c.N));
    c.u_list = list_from_json<Jet>(field(j, "u", root), "certificate.u", jet_at(c.N));
    c.b_list = list_from_json<Scalar>(field(j, "b", root), "certificate.b", scalar_from_json);
    c.G = jet_from_json(field(j, "G", root), dim, c.N, "certificate.G");
    c.residual = jet_from_json(field(j, "residual", root), dim, c.verified_through_degree, "certificate.residual");
    c.diagonal = list_from_json<Scalar>(field(j, "diagonal", root), "certificate.diagonal",
                                        [](const json &x, const std::string &w) { return parse_scalar(string_field(x, w)); });

    const json &div = field(j, "divergence", root);
    c.divergence.t_values = rationals_from_json(field(div, "t", "certificate.divergence"), "certificate.divergence.t");
    c.divergence.rows = list_from_json<DivergenceRow>(
        field(div, "rows", "certificate.divergence"), "certificate.divergence.rows",
        [](const json &x, const std::string &w) {
            return DivergenceRow{natural(field(x, "k", w), w + ".k"),
                                 parse_scalar(string_field(field(x, "diagonal", w), w + ".diagonal")),
                                 rationals_from_json(field(x, "partial_sums", w), w + ".partial_sums")};
        });
    const json &div_flag = field(j, "diverges", root);
    if (!div_flag.is_boolean())
        throw InputError("certificate.diverges: expected a boolean");
    c.diverges = div_flag.get<bool>();
    return c;
}

CounterexampleCertificate parse_certificate_file(const std::filesystem::path &path)
{
    const json j = read_json_file(path);
    try {
        return certificate_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string serialize(const CounterexampleCertificate &cert) { return to_json(cert).dump(2) + "\n"; }

void emit_certificate(const CounterexampleCertificate &cert, const std::filesystem::path &path)
{
    const auto failures = certificate_failures(cert);
    if (!failures.empty())
        throw InvariantViolation("refusing to write certificate: " + failures.front());
    const std::string text = serialize(cert);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
    if (!out)
        throw InputError("write failed for " + path.string());
}

json to_json(const OdeProblem &p)
{
    json coeffs = json::array();
    for (const auto &a : p.coefficients)
        coeffs.push_back(to_json(a));
    return json{{"order", p.order}, {"trunc_degree", p.trunc_degree}, {"coefficients", coeffs}, {"data", to_json(p.data)}};
}

OdeProblem ode_problem_from_json(const json &j)
{
    const std::string root = "ode";
    OdeProblem p;
    p.order = natural(field(j, "order", root), "ode.order");
    p.trunc_degree = natural(field(j, "trunc_degree", root), "ode.trunc_degree");
    const unsigned N = p.trunc_degree;
    p.coefficients = list_from_json<Jet>(field(j, "coefficients", root), "ode.coefficients",
                                         [N](const json &x, const std::string &w) { return jet_from_json(x, 1, N, w); });
    p.data = jet_from_json(field(j, "data", root), 1, N, "ode.data");
    p.validate();
    return p;
}

OdeProblem parse_ode_file(const std::filesystem::path &path)
{
    const json j = read_json_file(path);
    try {
        return ode_problem_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

} // namespace flatjet
