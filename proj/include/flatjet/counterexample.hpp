#pragma once

#include "flatjet/diff_operator.hpp"
#include "flatjet/recursion.hpp"

#include <functional>
#include <string>
#include <vector>

namespace flatjet {

/// x_1^k in `dim` variables, exact (truncated at k unless told otherwise).
Jet default_pk(unsigned k, std::size_t dim);
Jet default_pk(unsigned k, std::size_t dim, unsigned trunc_degree);

/// Point (x_1, ..., x_{n-1}) where every boundary polynomial is nonzero.
struct BairePoint {
    std::vector<Rational> coords;
    /// p_k evaluated at (coords, 0), in input order.
    std::vector<Scalar> witnesses;

    /// coords with x_n = 0 appended, as a point of the ambient space.
    std::vector<Scalar> ambient_point(const Rational &t = Rational(1)) const;

    friend bool operator==(const BairePoint &, const BairePoint &) = default;
};

/// Deterministic grid search. With D = max(sum deg p_k, denominator_hint)
/// the candidates are (j_1, ..., j_{n-1}) / (D + 2), 1 <= j_i <= D + 1,
/// visited in graded-lex order of j. The product of the p_k has degree <= D,
/// so it cannot vanish on the whole grid and the search terminates.
BairePoint baire_point(std::span<const Jet> p_list, unsigned denominator_hint = 0);

/// b_k = k! / p_k(x_bar), so that b_k p_k(x_bar) = k! exactly.
Scalar compute_bk(const Jet &p_k, const BairePoint &x_bar, unsigned k);

/// sum_i b_i u_i truncated at `trunc_degree`, where u_i has order first_k + i.
/// Throws InvariantViolation if some u_i vanishes to lower order (that would
/// break the lower-triangular structure that makes the sum well defined).
Jet assemble_G(std::span<const Jet> u_list, std::span<const Scalar> b_list, std::size_t dim,
               unsigned trunc_degree, unsigned first_k = 1);

/// L(G); a certificate requires the zero jet.
Jet verify_flatness(const DiffOperator &op, const Jet &G);

struct DivergenceRow {
    unsigned k;
    /// b_k p_k(x_bar); must equal k!.
    Scalar diagonal;
    /// sum_{j <= k} |b_j p_j(t x_bar)|, one entry per t.
    std::vector<Rational> partial_sums;

    friend bool operator==(const DivergenceRow &, const DivergenceRow &) = default;
};

struct DivergenceTable {
    std::vector<Rational> t_values;
    /// Row 0 is the constant term 0! = 1 of the series, then k = 1..K.
    std::vector<DivergenceRow> rows;

    friend bool operator==(const DivergenceTable &, const DivergenceTable &) = default;
};

/// b_list[i] and p_list[i] belong to k = i + 1.
DivergenceTable divergence_table(std::span<const Scalar> b_list, std::span<const Jet> p_list,
                                 const BairePoint &x_bar, std::span<const Rational> t_values);

struct CertificateOptions {
    /// Boundary polynomial for degree k; defaults to default_pk.
    std::function<Jet(unsigned k, std::size_t dim)> boundary;
    /// Upper bound on concurrent u_k solves.
    unsigned threads = 1;
    unsigned denominator_hint = 0;
    std::vector<Rational> t_values{Rational(1, 10), Rational(1, 2), Rational(1)};
};

struct CounterexampleCertificate {
    std::string operator_digest;
    unsigned order = 0;
    unsigned K = 0;
    unsigned N = 0;
    std::vector<Jet> p_list;
    std::vector<Jet> u_list;
    BairePoint baire;
    std::vector<Scalar> b_list;
    /// sum_{k <= K} b_k u_k. Agrees with the jet of the full Borel series
    /// through degree K.
    Jet G;
    Jet residual;
    /// N - m.
    unsigned verified_through_degree = 0;
    std::vector<Scalar> diagonal;
    DivergenceTable divergence;
    bool diverges = false;

    friend bool operator==(const CounterexampleCertificate &, const CounterexampleCertificate &) = default;
};

/// Human-readable list of broken invariants; empty means the certificate holds.
std::vector<std::string> certificate_failures(const CounterexampleCertificate &cert);

/// Full pipeline. Stage failures are rethrown with the stage name prefixed.
CounterexampleCertificate build_certificate(const DiffOperator &op, unsigned K, const SolverConfig &cfg,
                                            const CertificateOptions &options = {});

} // namespace flatjet
