#pragma once

#include "flatjet/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace flatjet {

/// Dense square matrix over Gaussian rationals, row-major.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    explicit ScalarMatrix(std::size_t n) : n_(n), a_(n * n) {}
    ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ScalarMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Scalar &operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    friend bool operator==(const ScalarMatrix &, const ScalarMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

ScalarMatrix operator*(const ScalarMatrix &a, const ScalarMatrix &b);

/// Exact determinant by Gaussian elimination.
Scalar determinant(const ScalarMatrix &m);

/// Exact inverse; throws InputError if singular.
ScalarMatrix inverse(const ScalarMatrix &m);

} // namespace flatjet
