#pragma once

#include "flatjet/jet.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flatjet {

/// L = sum_{|alpha| <= m} a_alpha(x) D^alpha with jet coefficients.
///
/// All coefficient jets share the operator's dimension and truncation degree.
/// Construction validates that some principal coefficient is nonzero.
class DiffOperator {
public:
    using Terms = std::map<MultiIndex, Jet, GradedLexLess>;

    DiffOperator(std::size_t dim, unsigned order, unsigned trunc_degree, Terms terms);

    /// Constant-coefficient convenience: coefficients become constant jets.
    static DiffOperator constant(std::size_t dim, unsigned trunc_degree,
                                 const std::vector<std::pair<MultiIndex, Scalar>> &terms);

    std::size_t dim() const noexcept { return dim_; }
    unsigned order() const noexcept { return order_; }
    unsigned trunc_degree() const noexcept { return trunc_; }
    const Terms &terms() const noexcept { return terms_; }

    /// Coefficient of D^alpha (the zero jet when absent).
    Jet coeff(const MultiIndex &alpha) const;

    friend bool operator==(const DiffOperator &, const DiffOperator &) = default;

private:
    std::size_t dim_;
    unsigned order_;
    unsigned trunc_;
    Terms terms_;
};

/// sum_alpha a_alpha * D^alpha f. The result is reliable through
/// min(f.trunc - m, coefficient truncation).
Jet apply(const DiffOperator &op, const Jet &f);

/// Operator multiplied by a constant.
DiffOperator scale(const DiffOperator &op, const Scalar &c);

/// Canonical form D^beta - sum_{alpha_n < m} r_alpha D^alpha with
/// beta = (0, ..., 0, m), obtained by dividing through by a_beta.
struct CanonicalOperator {
    std::size_t dim;
    unsigned order;
    MultiIndex beta;
    DiffOperator::Terms remainder;
    /// The a_beta that was divided out.
    Jet leading;
};

/// Throws InputError when a_beta(0) = 0 (x_n is characteristic at 0).
CanonicalOperator canonical_form(const DiffOperator &op);

/// Applies D^beta - sum r_alpha D^alpha.
Jet apply(const CanonicalOperator &canon, const Jet &f);

/// Operator a_beta * (D^beta - sum r_alpha D^alpha), for checking the
/// canonical form against the original.
DiffOperator reconstruct(const CanonicalOperator &canon);

/// Principal symbol at x = 0 evaluated on a direction.
Scalar principal_symbol_at_origin(const DiffOperator &op, std::span<const Scalar> xi);

struct EllipticityReport {
    std::vector<std::vector<Scalar>> directions;
    std::vector<Scalar> symbol_values;
    /// First sampled direction with vanishing symbol, if any.
    std::optional<std::vector<Scalar>> failed_direction;
    /// Always set: a finite sample at x = 0 is evidence, not a proof.
    bool sampling_only = true;

    bool passed() const noexcept { return !failed_direction.has_value(); }
};

/// Deterministic rational unit directions: inverse stereographic projection
/// of the grid {j / s : |j| <= s}^{n-1} plus the pole (0, ..., 0, 1).
std::vector<std::vector<Scalar>> sphere_directions(std::size_t dim, unsigned samples_per_axis);

/// Samples the principal symbol with coefficients frozen at 0.
EllipticityReport ellipticity_check(const DiffOperator &op, unsigned samples_per_axis);

} // namespace flatjet
