#include <fockvx/fock.hpp>

#include <stdexcept>
#include <string>

namespace fockvx
{

FockVector embed(const OneParticleVector &x)
{
    FockVector out;
    for (const auto &[mode, value] : x.coords()) {
        out.add_term(MultiIndex::unit(mode), value);
    }
    return out;
}

FockVector power(const OneParticleVector &x, int n)
{
    if (n < 0) {
        throw std::invalid_argument("negative power " + std::to_string(n));
    }
    return pow(embed(x), static_cast<unsigned>(n));
}

Scalar inner(const FockVector &a, const FockVector &b)
{
    Scalar acc;
    const auto &bt = b.terms();
    for (const auto &[p, ca] : a.terms()) {
        const auto it = bt.find(p);
        if (it != bt.end()) {
            acc += ca.conj() * it->second * multiindex_factorial(p);
        }
    }
    return acc;
}

FockVector annihilate_mode(int mode, const FockVector &a)
{
    FockVector out;
    for (const auto &[p, c] : a.terms()) {
        const int e = p.exponent(mode);
        if (e != 0) {
            out.add_term(p.lowered(mode), c * Scalar(e));
        }
    }
    return out;
}

FockVector annihilate(const OneParticleVector &x, const FockVector &a)
{
    FockVector out;
    for (const auto &[p, c] : a.terms()) {
        for (const auto &[mode, exp] : p.entries()) {
            const Scalar xk = x.coords().contains(mode) ? x.coords().at(mode) : Scalar{};
            if (!xk.is_zero()) {
                out.add_term(p.lowered(mode), xk.conj() * Scalar(exp) * c);
            }
        }
    }
    return out;
}

FockVector coherent(const OneParticleVector &u, int max_degree)
{
    if (max_degree < 0) {
        throw std::invalid_argument("degree cutoff must be >= 0, got " + std::to_string(max_degree));
    }
    const FockVector x = embed(u);
    FockVector term = vacuum();
    FockVector out = term;
    for (int n = 1; n <= max_degree; ++n) {
        term = term * x;
        term *= Scalar(Rational(1, n));
        out += term;
    }
    return out;
}

FockVector power_annihilate_coherent(const OneParticleVector &x, int n, const OneParticleVector &w, int max_degree)
{
    if (n < 0) {
        throw std::invalid_argument("annihilation power must be >= 0, got " + std::to_string(n));
    }
    if (max_degree < n) {
        return {};
    }
    FockVector out = coherent(w, max_degree);
    for (int i = 0; i < n; ++i) {
        out = annihilate(x, out);
    }
    return out;
}

FockVector exp_annihilate(const OneParticleVector &w, const FockVector &a)
{
    FockVector out = a;
    FockVector term = a;
    const int d = a.degree();
    for (int i = 1; i <= d && !term.is_zero(); ++i) {
        term = annihilate(w, term);
        term *= Scalar(Rational(1, i));
        out += term;
    }
    return out;
}

bool check_multiplicability(const OneParticleVector &u, const FockVector &f, const FockVector &g, int max_degree)
{
    if (f.degree() + g.degree() > max_degree) {
        throw std::invalid_argument("multiplicability check needs deg f + deg g <= D (got "
                                    + std::to_string(f.degree()) + " + " + std::to_string(g.degree()) + " > "
                                    + std::to_string(max_degree) + ")");
    }
    const FockVector e = coherent(u, max_degree);
    return inner(e, fock_mul(f, g)) == inner(e, f) * inner(e, g);
}

} // namespace fockvx
