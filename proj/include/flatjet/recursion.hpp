#pragma once

#include "flatjet/diff_operator.hpp"

#include <optional>
#include <vector>

namespace flatjet {

struct SolverConfig {
    /// Truncation degree of the solutions; must be >= the operator order.
    unsigned trunc_degree = 12;
    /// Defaults to trunc_degree - m + 2, enough for the x_n-adic argument.
    std::optional<unsigned> max_iterations;
    /// Polydisc radii for the optional majorant normalization, each in (0, 1).
    std::vector<Rational> radii;
    /// Scale p_k so the majorant of L p_k is at most one.
    bool normalize = false;

    unsigned iteration_cap(unsigned order) const;
    /// Throws InputError on N < m or radii outside (0, 1).
    void validate(std::size_t dim, unsigned order) const;
};

/// v_0 = 0, v_1, ... of the fixed-point recursion and their differences.
struct SolveTrace {
    std::vector<Jet> iterates;
    std::vector<Jet> differences;
    /// First nu with differences[nu] == 0.
    unsigned stabilized_at = 0;

    const Jet &solution() const { return iterates.back(); }
};

/// Inverts D^beta, beta = (0, ..., 0, m), with zero Cauchy data on x_n = 0:
/// c x^gamma -> c x^(gamma + beta) gamma_n! / (gamma_n + m)!.
/// The result is reliable through rhs.trunc + m.
Jet solve_dbeta(const Jet &rhs, unsigned m);

/// Runs D^beta v_{nu+1} = sum r_alpha D^alpha v_nu - L' p_k, where L' is the
/// canonical operator, until the difference is exactly zero. p_k must be a
/// homogeneous polynomial free of x_n. Throws InvariantViolation if the
/// iteration cap is hit.
SolveTrace picard_iterate(const CanonicalOperator &canon, const Jet &p_k, const SolverConfig &cfg);

/// u_k = p_k + v_k with L u_k = 0 through N - m, ord u_k = k and
/// u_k = p_k on x_n = 0. The postconditions are checked.
Jet build_uk(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg);

/// Same, also returning the trace.
std::pair<Jet, SolveTrace> build_uk_traced(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg);

/// sum_gamma (|re c| + |im c|) R^gamma, an exact upper bound for the sup of
/// the truncated series on the polydisc of radii R.
Rational majorant_bound(const Jet &a, std::span<const Rational> radii);

/// The factor 1 / M_k applied to p_k when normalizing (1 when M_k <= 1).
Scalar normalization_factor(const DiffOperator &op, const Jet &p_k, const SolverConfig &cfg);

} // namespace flatjet
