#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <fockvx/multi_index.hpp>
#include <fockvx/scalar.hpp>

namespace fockvx
{

// Sparse commutative polynomial over Scalar in variables indexed by mode.
// Zero coefficients are never stored; iteration follows MultiIndex order.
class Polynomial
{
public:
    using term_map = std::map<MultiIndex, Scalar>;

    Polynomial() = default;
    explicit Polynomial(Scalar constant);

    static Polynomial one() { return Polynomial(Scalar(1)); }
    static Polynomial monomial(MultiIndex p, Scalar coeff = 1);
    static Polynomial variable(int mode) { return monomial(MultiIndex::unit(mode)); }

    const term_map &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const MultiIndex &p) const;

    // Accumulates c into the coefficient of p, erasing it if it cancels.
    void add_term(const MultiIndex &p, const Scalar &c);

    // Highest total degree; 0 for constants and for the zero polynomial.
    int degree() const;
    // Drops every monomial of total degree > max_degree.
    Polynomial truncated(int max_degree) const;
    // Part of exact total degree d.
    Polynomial component(int d) const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Scalar &s);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar &s) { return a *= s; }
    friend Polynomial operator*(const Scalar &s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    term_map terms_;
};

Polynomial pow(const Polynomial &base, unsigned exponent);

} // namespace fockvx
