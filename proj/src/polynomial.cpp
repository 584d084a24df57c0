#include <fockvx/polynomial.hpp>

#include <algorithm>

namespace fockvx
{

Polynomial::Polynomial(Scalar constant)
{
    add_term(MultiIndex{}, constant);
}

Polynomial Polynomial::monomial(MultiIndex p, Scalar coeff)
{
    Polynomial out;
    out.add_term(p, coeff);
    return out;
}

Scalar Polynomial::coefficient(const MultiIndex &p) const
{
    const auto it = terms_.find(p);
    return it == terms_.end() ? Scalar{} : it->second;
}

void Polynomial::add_term(const MultiIndex &p, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    const auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

int Polynomial::degree() const
{
    int d = 0;
    for (const auto &[p, c] : terms_) {
        d = std::max(d, p.degree());
    }
    return d;
}

Polynomial Polynomial::truncated(int max_degree) const
{
    Polynomial out;
    for (const auto &[p, c] : terms_) {
        if (p.degree() <= max_degree) {
            out.terms_.emplace_hint(out.terms_.end(), p, c);
        }
    }
    return out;
}

Polynomial Polynomial::component(int d) const
{
    Polynomial out;
    for (const auto &[p, c] : terms_) {
        if (p.degree() == d) {
            out.terms_.emplace_hint(out.terms_.end(), p, c);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto &[p, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    for (const auto &[p, c] : o.terms_) {
        add_term(p, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    for (const auto &[p, c] : o.terms_) {
        add_term(p, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[p, c] : terms_) {
        c *= s;
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    Polynomial out;
    for (const auto &[pa, ca] : a.terms_) {
        for (const auto &[pb, cb] : b.terms_) {
            out.add_term(pa + pb, ca * cb);
        }
    }
    return out;
}

Polynomial pow(const Polynomial &base, unsigned exponent)
{
    Polynomial result = Polynomial::one();
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * base;
    }
    return result;
}

} // namespace fockvx
