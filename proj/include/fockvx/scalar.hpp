#pragma once

// Exact Gaussian rationals a + b i with a, b in Q.

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fockvx
{

using Rational = mpq_class;

// Parses "n" or "n/d" (optional leading sign on n); throws std::invalid_argument.
Rational parse_rational(std::string_view text);
// Canonical "n/d", or "n" when the denominator is 1.
std::string rational_to_string(const Rational &r);

class Scalar
{
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(Rational re, Rational im = 0);

    static Scalar i() { return Scalar(0, 1); }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // |s|^2, always real and non-negative.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    // Throws std::domain_error on division by zero.
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    // "3/2", "-1/3i", "1/2 + 2i".
    std::string to_string() const;

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

Scalar pow(const Scalar &base, unsigned exponent);
Scalar factorial(unsigned n);

} // namespace fockvx
