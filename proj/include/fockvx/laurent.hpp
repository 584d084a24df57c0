#pragma once

#include <map>

#include <fockvx/scalar.hpp>

namespace fockvx
{

// Finitely supported sum_w c_w z^w with exact coefficients; zeros are not stored.
class LaurentPolynomial
{
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Scalar constant);

    static LaurentPolynomial monomial(int w, Scalar c);

    const std::map<int, Scalar> &coeffs() const { return coeffs_; }
    Scalar coefficient(int w) const;
    bool is_zero() const { return coeffs_.empty(); }
    void add_term(int w, const Scalar &c);

    LaurentPolynomial &operator+=(const LaurentPolynomial &o);
    LaurentPolynomial &operator*=(const Scalar &s);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Scalar &s) { return a *= s; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);

    friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

private:
    std::map<int, Scalar> coeffs_;
};

LaurentPolynomial pow(const LaurentPolynomial &base, unsigned exponent);

// sum_{m=0}^{M} P^m / m!
LaurentPolynomial truncated_exp(const LaurentPolynomial &exponent, int order);

// sum_{i=0}^{M} x^i / i!, the order-M partial sum of e^x.
Scalar exp_partial_sum(const Scalar &x, int order);

} // namespace fockvx
