#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace flatjet {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (decimal, q != 0) into a canonical rational.
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, reduced "p/q" with q > 0 otherwise.
std::string to_string(const Rational &q);

Integer factorial(unsigned long k);

/// Exact Gaussian rational re + im*i. Always kept canonical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }
    Scalar(const Integer &v) : re_(v) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }
    static Scalar ratio(long p, long q) { return Scalar(Rational(Integer(p), Integer(q))); }

    const Rational &re() const noexcept { return re_; }
    const Rational &im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    /// |re| + |im|, an exact upper bound on the modulus.
    Rational abs_bound() const { return abs(re_) + abs(im_); }

    Scalar operator-() const { return {-re_, -im_}; }

    Scalar &operator+=(const Scalar &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar &operator-=(const Scalar &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Integer power, k >= 0.
    Scalar pow(unsigned k) const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const Scalar &s);
std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace flatjet
