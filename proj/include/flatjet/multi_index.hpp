#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace flatjet {

/// Exponent vector (alpha_1, ..., alpha_n) of a monomial or derivative.
class MultiIndex {
public:
    using value_type = std::uint32_t;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
    MultiIndex(std::initializer_list<value_type> e) : e_(e) {}
    explicit MultiIndex(std::vector<value_type> e) : e_(std::move(e)) {}

    /// (0, ..., 0, 1, 0, ..., 0) with the one in slot `var`, scaled by `power`.
    static MultiIndex unit(std::size_t dim, std::size_t var, value_type power = 1)
    {
        MultiIndex m(dim);
        m.e_[var] = power;
        return m;
    }

    std::size_t dim() const noexcept { return e_.size(); }
    value_type operator[](std::size_t i) const { return e_[i]; }
    value_type &operator[](std::size_t i) { return e_[i]; }
    std::span<const value_type> exponents() const noexcept { return e_; }
    value_type last() const { return e_.back(); }

    /// |alpha|.
    unsigned degree() const noexcept
    {
        return std::accumulate(e_.begin(), e_.end(), 0u);
    }

    MultiIndex &operator+=(const MultiIndex &o)
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            e_[i] += o.e_[i];
        return *this;
    }
    friend MultiIndex operator+(MultiIndex a, const MultiIndex &b) { return a += b; }

    /// Componentwise a >= b.
    bool dominates(const MultiIndex &o) const
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] < o.e_[i])
                return false;
        return true;
    }

    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<value_type> e_;
};

/// Graded order: total degree first, then lexicographic on the exponents.
/// Fixes iteration and serialization order everywhere.
struct GradedLexLess {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const
    {
        auto da = a.degree();
        auto db = b.degree();
        if (da != db)
            return da < db;
        auto ea = a.exponents();
        auto eb = b.exponents();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    }
};

} // namespace flatjet
