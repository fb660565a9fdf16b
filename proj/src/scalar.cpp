#include "flatjet/scalar.hpp"

#include "flatjet/errors.hpp"

#include <cctype>

namespace flatjet {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("malformed rational '" + std::string(text) + "'");

    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw InputError("zero denominator in rational '" + std::string(text) + "'");
    if (text.front() == '-')
        p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &q)
{
    // mpq get_str already omits "/1" and keeps the sign on the numerator.
    return q.get_str(10);
}

Integer factorial(unsigned long k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero())
        throw InputError("division by zero scalar");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational d = o.norm2();
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::pow(unsigned k) const
{
    Scalar result(1);
    Scalar base = *this;
    while (k) {
        if (k & 1u)
            result *= base;
        k >>= 1u;
        if (k)
            base *= base;
    }
    return result;
}

std::string to_string(const Scalar &s)
{
    if (s.is_real())
        return to_string(s.re());
    if (sgn(s.re()) == 0)
        return to_string(s.im()) + "i";
    std::string im = to_string(s.im());
    if (im.front() != '-')
        im.insert(im.begin(), '+');
    return to_string(s.re()) + im + "i";
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << to_string(s);
}

} // namespace flatjet
