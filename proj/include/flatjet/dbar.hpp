#pragma once

#include "flatjet/jet.hpp"

#include <variant>
#include <vector>

namespace flatjet {

// Real coordinates are interleaved (x_1, y_1, ..., x_n, y_n); Wirtinger
// coordinates likewise (z_1, zbar_1, ..., z_n, zbar_n). Derivatives follow
// the convention d/dzbar_j = d/dx_j + i d/dy_j (no factor 1/2).

/// A jet in paired complex variables. Even slots hold z_j, odd slots zbar_j.
class WirtingerJet {
public:
    explicit WirtingerJet(Jet jet);

    const Jet &jet() const noexcept { return jet_; }
    std::size_t complex_dim() const noexcept { return jet_.dim() / 2; }

    static bool is_holomorphic_slot(std::size_t var) noexcept { return var % 2 == 0; }

    friend bool operator==(const WirtingerJet &, const WirtingerJet &) = default;

private:
    Jet jet_;
};

/// sum_j phi_j dzbar_j with components in real coordinates.
struct ZeroOneForm {
    std::vector<Jet> components;

    bool is_zero() const;
    /// d/dzbar_k phi_j == d/dzbar_j phi_k for all j, k through the shared
    /// reliable degree.
    bool is_closed() const;
};

/// Matrix sending real coordinates to Wirtinger ones:
/// x_j = (z_j + zbar_j) / 2, y_j = (z_j - zbar_j) / (2i).
ScalarMatrix real_to_wirtinger(std::size_t complex_dim);
/// Its inverse: z_j = x_j + i y_j, zbar_j = x_j - i y_j.
ScalarMatrix wirtinger_to_real(std::size_t complex_dim);

WirtingerJet wirtinger(const Jet &f);
Jet to_real(const WirtingerJet &f);

/// No barred variable appears in any stored monomial.
bool is_formally_holomorphic(const WirtingerJet &f);

/// d/dzbar_j f = (d/dx_j + i d/dy_j) f.
Jet dbar_component(const Jet &f, std::size_t j);

/// The (0,1)-form dbar f. Throws InvariantViolation if it is not closed.
ZeroOneForm dbar_apply(const Jet &f);

struct Flat {
    friend bool operator==(Flat, Flat) = default;
};
struct FormallyHolomorphic {
    friend bool operator==(FormallyHolomorphic, FormallyHolomorphic) = default;
};
struct Mixed {
    /// Lowest total degree of a monomial containing a barred variable.
    unsigned order;
    friend bool operator==(Mixed, Mixed) = default;
};
using SolutionClass = std::variant<Flat, FormallyHolomorphic, Mixed>;

/// Classifies the jet of a presented solution f of dbar f = phi with phi
/// flat: zero (flat solutions exist), nonzero and holomorphic (then no
/// flat solution of the same equation exists), or mixed (then phi could not
/// have been flat).
SolutionClass classify_solution(const Jet &f);

std::string to_string(const SolutionClass &c);

/// F(z_1, ..., z_n) = sum_j G1(z_j). G1 must be formally holomorphic in one
/// complex variable. Checks that every dbar component of F vanishes, that F
/// is holomorphic and that the z_1^k coefficients match those of G1.
WirtingerJet multidim_G(const WirtingerJet &G1, std::size_t n);

} // namespace flatjet
