#pragma once

#include "flatjet/jet.hpp"

#include <vector>

namespace flatjet {

/// f^(n) + a_{n-1} f^(n-1) + ... + a_0 f = g in one variable.
struct OdeProblem {
    unsigned order = 1;
    /// a_0, ..., a_{n-1}; one-dimensional jets.
    std::vector<Jet> coefficients;
    Jet data;
    unsigned trunc_degree = 0;

    /// Throws InputError if shapes disagree or N < n.
    void validate() const;
};

/// The jet of the unique solution with zero Cauchy data at 0, computed
/// degree by degree from f^(n) = g - sum a_j f^(j).
Jet ode_jet_solve(const OdeProblem &p);

/// Left-hand side applied to f; reliable through N - n.
Jet ode_apply(const OdeProblem &p, const Jet &f);

} // namespace flatjet
