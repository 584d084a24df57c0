#include <fockvx/laurent.hpp>

namespace fockvx
{

LaurentPolynomial::LaurentPolynomial(Scalar constant)
{
    add_term(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(int w, Scalar c)
{
    LaurentPolynomial out;
    out.add_term(w, c);
    return out;
}

Scalar LaurentPolynomial::coefficient(int w) const
{
    const auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Scalar{} : it->second;
}

void LaurentPolynomial::add_term(int w, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    const auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o)
{
    for (const auto &[w, c] : o.coeffs_) {
        add_term(w, c);
    }
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        coeffs_.clear();
    }
    for (auto &[w, c] : coeffs_) {
        c *= s;
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    LaurentPolynomial out;
    for (const auto &[wa, ca] : a.coeffs_) {
        for (const auto &[wb, cb] : b.coeffs_) {
            out.add_term(wa + wb, ca * cb);
        }
    }
    return out;
}

LaurentPolynomial pow(const LaurentPolynomial &base, unsigned exponent)
{
    LaurentPolynomial out(Scalar(1));
    for (unsigned i = 0; i < exponent; ++i) {
        out = out * base;
    }
    return out;
}

LaurentPolynomial truncated_exp(const LaurentPolynomial &exponent, int order)
{
    LaurentPolynomial term(Scalar(1));
    LaurentPolynomial out = term;
    for (int m = 1; m <= order; ++m) {
        term = term * exponent;
        term *= Scalar(Rational(1, m));
        out += term;
    }
    return out;
}

Scalar exp_partial_sum(const Scalar &x, int order)
{
    Scalar term(1);
    Scalar out(1);
    for (int i = 1; i <= order; ++i) {
        term *= x;
        term *= Scalar(Rational(1, i));
        out += term;
    }
    return out;
}

} // namespace fockvx
