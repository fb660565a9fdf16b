#pragma once

#include "flatjet/matrix.hpp"
#include "flatjet/multi_index.hpp"
#include "flatjet/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace flatjet {

/// Sparse truncated power series in `dim` variables at the origin.
///
/// Coefficients are exact for every monomial of total degree up to
/// `trunc_degree`; nothing is known above it. Zero coefficients are never
/// stored, so a jet with no terms is the jet of a function flat at 0 (to the
/// reliable degree). Terms iterate in graded-lex order.
class Jet {
public:
    using Terms = std::map<MultiIndex, Scalar, GradedLexLess>;

    Jet() = default;
    Jet(std::size_t dim, unsigned trunc_degree);

    static Jet constant(std::size_t dim, unsigned trunc_degree, const Scalar &c);
    static Jet monomial(std::size_t dim, unsigned trunc_degree, const MultiIndex &gamma, const Scalar &c = Scalar(1));
    /// The variable x_{var} (0-based).
    static Jet variable(std::size_t dim, unsigned trunc_degree, std::size_t var);

    std::size_t dim() const noexcept { return dim_; }
    unsigned trunc_degree() const noexcept { return trunc_; }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^gamma (zero when absent).
    Scalar coeff(const MultiIndex &gamma) const;

    /// Adds c*x^gamma. Monomials above the truncation degree are dropped;
    /// cancellations are erased.
    void add_term(const MultiIndex &gamma, const Scalar &c);

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Jet operator-() const;
    Jet &operator*=(const Scalar &c);
    friend Jet operator*(const Scalar &c, Jet a) { return a *= c; }

    friend bool operator==(const Jet &a, const Jet &b)
    {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_ = 1;
    unsigned trunc_ = 0;
    Terms terms_;
};

Jet operator+(const Jet &a, const Jet &b);
Jet operator-(const Jet &a, const Jet &b);
Jet operator*(const Jet &a, const Jet &b);

using JetTerm = std::pair<Scalar, Jet>;

/// Sum of c_i * a_i. Result is truncated to the smallest input truncation.
/// An empty list needs the shape, hence the overload.
Jet linear_combination(std::span<const JetTerm> terms);
Jet linear_combination(std::span<const JetTerm> terms, std::size_t dim, unsigned trunc_degree);

/// Truncated Cauchy product; degree min(a.trunc, b.trunc).
Jet mul(const Jet &a, const Jet &b);

/// Formal derivative D^alpha. Truncation drops by |alpha|; asking for more
/// than the jet holds throws ReliabilityExhausted.
Jet derive(const Jet &a, const MultiIndex &alpha);

/// Exact evaluation of the truncated polynomial.
Scalar eval(const Jet &a, std::span<const Scalar> point);

/// Order of vanishing at 0; nullopt stands for +infinity (zero jet).
std::optional<unsigned> ord(const Jet &a);

/// Smallest exponent of the last variable over all monomials; nullopt for
/// the zero jet.
std::optional<unsigned> last_variable_order(const Jet &a);

/// Keeps only monomials free of the last variable (restriction to x_n = 0).
Jet restrict_last_zero(const Jet &a);

/// Multiplicative inverse up to the truncation degree. Requires a(0) != 0.
Jet reciprocal(const Jet &a);

/// Replaces x_i by sum_j m(i, j) * y_j. The matrix must be invertible.
Jet substitute_linear(const Jet &a, const ScalarMatrix &m);

/// Drops everything above `trunc_degree`; cannot raise the truncation.
Jet truncate(const Jet &a, unsigned trunc_degree);

/// Reinterprets a jet with a higher truncation degree. Only sound when the
/// jet is known to be an exact polynomial.
Jet with_trunc_degree(const Jet &a, unsigned trunc_degree);

/// Highest total degree of a stored monomial; nullopt for the zero jet.
std::optional<unsigned> max_degree(const Jet &a);

/// True when every stored monomial has total degree exactly k.
bool is_homogeneous(const Jet &a, unsigned k);

std::string to_string(const Jet &a);

} // namespace flatjet
