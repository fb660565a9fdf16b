#include "flatjet/matrix.hpp"

#include "flatjet/errors.hpp"

#include <utility>

namespace flatjet {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : n_(rows.size()), a_()
{
    a_.reserve(n_ * n_);
    for (const auto &row : rows) {
        if (row.size() != n_)
            throw InputError("matrix must be square");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n)
{
    ScalarMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

ScalarMatrix operator*(const ScalarMatrix &a, const ScalarMatrix &b)
{
    if (a.size() != b.size())
        throw InputError("matrix size mismatch");
    const auto n = a.size();
    ScalarMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace {

// Row-reduces `m` in place (and `aug` alongside it when given). Returns the
// determinant; zero means singular and leaves the inputs half-reduced.
Scalar eliminate(ScalarMatrix &m, ScalarMatrix *aug)
{
    const auto n = m.size();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                if (aug)
                    std::swap((*aug)(pivot, j), (*aug)(col, j));
            }
            det = -det;
        }
        const Scalar p = m(col, col);
        det *= p;
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            if (aug)
                (*aug)(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero())
                continue;
            const Scalar f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                if (aug)
                    (*aug)(r, j) -= f * (*aug)(col, j);
            }
        }
    }
    return det;
}

} // namespace

Scalar determinant(const ScalarMatrix &m)
{
    ScalarMatrix work = m;
    return eliminate(work, nullptr);
}

ScalarMatrix inverse(const ScalarMatrix &m)
{
    ScalarMatrix work = m;
    ScalarMatrix inv = ScalarMatrix::identity(m.size());
    if (eliminate(work, &inv).is_zero())
        throw InputError("singular matrix");
    return inv;
}

} // namespace flatjet
