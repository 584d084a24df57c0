#include <fockvx/vertex.hpp>

#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace fockvx
{

namespace
{

void check_support(const OneParticleVector &x, int modes, const char *name)
{
    if (!x.coords().empty() && x.coords().rbegin()->first > modes) {
        throw std::out_of_range(std::string(name) + " has mode " + std::to_string(x.coords().rbegin()->first)
                                + " beyond the " + std::to_string(modes) + " basis modes");
    }
}

void check_modes(const BasisConfig &config, const Cutoffs &cutoffs)
{
    cutoffs.validate();
    if (cutoffs.modes != config.modes()) {
        throw config_error("mode cutoff K=" + std::to_string(cutoffs.modes) + " does not match the "
                           + std::to_string(config.modes()) + "-mode basis");
    }
}

// prod_k a_k^{p_k}
Scalar monomial_value(const std::vector<Scalar> &values, const MultiIndex &p)
{
    Scalar out(1);
    for (const auto &[mode, exp] : p.entries()) {
        out *= pow(values[static_cast<std::size_t>(mode - 1)], static_cast<unsigned>(exp));
    }
    return out;
}

Scalar term_value(const VertexPairings &pr, const TuplePair &pq)
{
    return monomial_value(pr.creation, pq.p) * monomial_value(pr.annihilation, pq.q)
           / (multiindex_factorial(pq.p) * multiindex_factorial(pq.q));
}

void partitions(int remaining, int max_part, std::vector<MultiIndex::entry> &parts, std::vector<MultiIndex> &out)
{
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        for (int e = 1; e * k <= remaining; ++e) {
            parts.emplace_back(k, e);
            partitions(remaining - e * k, k - 1, parts, out);
            parts.pop_back();
        }
    }
}

// Polynomial in formal t, s with Laurent coefficients in z, truncated at t^k s^j.
class TszSeries
{
public:
    using key = std::array<int, 3>; // t-degree, s-degree, z-exponent

    TszSeries(int t_max, int s_max) : t_max_(t_max), s_max_(s_max) {}

    void add(const key &e, const Scalar &c)
    {
        if (c.is_zero() || e[0] > t_max_ || e[1] > s_max_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    TszSeries operator*(const TszSeries &o) const
    {
        TszSeries out(t_max_, s_max_);
        for (const auto &[ea, ca] : terms_) {
            for (const auto &[eb, cb] : o.terms_) {
                out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
            }
        }
        return out;
    }

    TszSeries &operator+=(const TszSeries &o)
    {
        for (const auto &[e, c] : o.terms_) {
            add(e, c);
        }
        return *this;
    }

    TszSeries &operator*=(const Scalar &s)
    {
        for (auto &[e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    Scalar coefficient(const key &e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Scalar{} : it->second;
    }

private:
    int t_max_;
    int s_max_;
    std::map<key, Scalar> terms_;
};

TszSeries truncated_exp_tsz(const TszSeries &x, int order, int t_max, int s_max)
{
    TszSeries term(t_max, s_max);
    term.add({0, 0, 0}, 1);
    TszSeries out = term;
    for (int m = 1; m <= order; ++m) {
        term = term * x;
        term *= Scalar(Rational(1, m));
        out += term;
    }
    return out;
}

} // namespace

VertexPairings vertex_pairings(const OneParticleVector &u, const OneParticleVector &v, const BasisConfig &config)
{
    check_support(u, config.modes(), "u");
    check_support(v, config.modes(), "v");
    VertexPairings out;
    for (int k = 1; k <= config.modes(); ++k) {
        out.creation.push_back(inner(u, config.f(k)));
        out.annihilation.push_back(inner(config.g(k), v));
    }
    out.overlap = inner(u, v);
    return out;
}

LaurentPolynomial vertex_exponent(const VertexPairings &pairings)
{
    LaurentPolynomial out;
    for (std::size_t n = 0; n < pairings.creation.size(); ++n) {
        out.add_term(static_cast<int>(n) + 1, pairings.creation[n]);
    }
    for (std::size_t n = 0; n < pairings.annihilation.size(); ++n) {
        out.add_term(-(static_cast<int>(n) + 1), pairings.annihilation[n]);
    }
    return out;
}

SchurOperator schur_terms(long w, const Cutoffs &cutoffs)
{
    cutoffs.validate();
    SchurOperator op{w, cutoffs, {}};
    for (int m = 0; m <= cutoffs.order; ++m) {
        for (auto &pq : enumerate_pq(m, w, cutoffs.modes)) {
            Scalar coeff = Scalar(1) / (multiindex_factorial(pq.p) * multiindex_factorial(pq.q));
            op.terms.push_back({std::move(pq.p), std::move(pq.q), std::move(coeff)});
        }
    }
    return op;
}

FockVector apply_schur(const SchurOperator &op, const FockVector &v, const BasisConfig &config, int max_degree)
{
    if (v.degree() > max_degree) {
        throw std::invalid_argument("apply_schur input has degree " + std::to_string(v.degree())
                                    + " above the cutoff " + std::to_string(max_degree));
    }
    if (op.cutoffs.modes > config.modes()) {
        throw config_error("operator uses " + std::to_string(op.cutoffs.modes) + " modes but the basis has "
                           + std::to_string(config.modes()));
    }

    std::vector<OneParticleVector> g;
    std::vector<FockVector> f;
    for (int k = 1; k <= config.modes(); ++k) {
        g.push_back(config.g(k));
        f.push_back(embed(config.f(k)));
    }

    // (prod g^q)* v, built one annihilator at a time from the shorter index.
    std::map<MultiIndex, FockVector> annihilated{{MultiIndex{}, v}};
    auto annihilate_by = [&](const MultiIndex &q, auto &self) -> const FockVector & {
        if (const auto it = annihilated.find(q); it != annihilated.end()) {
            return it->second;
        }
        const int mode = q.entries().back().first;
        const FockVector &rest = self(q.lowered(mode), self);
        return annihilated.emplace(q, annihilate(g[static_cast<std::size_t>(mode - 1)], rest)).first->second;
    };
    std::map<MultiIndex, FockVector> created{{MultiIndex{}, FockVector::one()}};
    auto create = [&](const MultiIndex &p, auto &self) -> const FockVector & {
        if (const auto it = created.find(p); it != created.end()) {
            return it->second;
        }
        const int mode = p.entries().back().first;
        const FockVector &rest = self(p.lowered(mode), self);
        return created.emplace(p, rest * f[static_cast<std::size_t>(mode - 1)]).first->second;
    };

    FockVector out;
    for (const auto &term : op.terms) {
        const int up = term.p.degree();
        if (up > max_degree || term.q.degree() > v.degree()) {
            continue;
        }
        const FockVector &lowered = annihilate_by(term.q, annihilate_by);
        if (lowered.is_zero()) {
            continue;
        }
        // The creation monomial is homogeneous of degree |p|.
        FockVector piece = create(term.p, create) * lowered.truncated(max_degree - up);
        piece *= term.coeff;
        out += piece;
    }
    return out;
}

LaurentSlice matrix_element_closed(const OneParticleVector &u, const OneParticleVector &v,
                                   const BasisConfig &config, const Cutoffs &cutoffs)
{
    check_modes(config, cutoffs);
    const VertexPairings pr = vertex_pairings(u, v, config);
    LaurentPolynomial series = truncated_exp(vertex_exponent(pr), cutoffs.order);
    series *= exp_partial_sum(pr.overlap, cutoffs.order);
    return {std::move(series), cutoffs};
}

Scalar matrix_element_expansion(const OneParticleVector &u, const OneParticleVector &v, long w, int m,
                                const BasisConfig &config)
{
    const VertexPairings pr = vertex_pairings(u, v, config);
    Scalar acc;
    for (const auto &pq : enumerate_pq(m, w, config.modes())) {
        acc += term_value(pr, pq);
    }
    return acc;
}

Scalar matrix_element_degree_matched(const OneParticleVector &u, const OneParticleVector &v, long w,
                                     const BasisConfig &config, const Cutoffs &cutoffs)
{
    check_modes(config, cutoffs);
    const VertexPairings pr = vertex_pairings(u, v, config);
    std::vector<Scalar> partial_sums;
    for (int n = 0; n <= cutoffs.degree; ++n) {
        partial_sums.push_back(exp_partial_sum(pr.overlap, n));
    }
    Scalar acc;
    for (int m = 0; m <= cutoffs.order; ++m) {
        for (const auto &pq : enumerate_pq(m, w, cutoffs.modes)) {
            const int top = std::max(pq.p.degree(), pq.q.degree());
            if (top > cutoffs.degree) {
                continue;
            }
            acc += term_value(pr, pq) * partial_sums[static_cast<std::size_t>(cutoffs.degree - top)];
        }
    }
    return acc;
}

bool verify_lemma_term(const OneParticleVector &u, const OneParticleVector &v, int m, const BasisConfig &config)
{
    if (m < 0) {
        throw std::invalid_argument("order m must be >= 0, got " + std::to_string(m));
    }
    const VertexPairings pr = vertex_pairings(u, v, config);
    LaurentPolynomial lhs = pow(vertex_exponent(pr), static_cast<unsigned>(m));
    lhs *= Scalar(1) / factorial(static_cast<unsigned>(m));
    const long span = static_cast<long>(config.modes()) * m;
    for (long w = -span; w <= span; ++w) {
        if (lhs.coefficient(static_cast<int>(w)) != matrix_element_expansion(u, v, w, m, config)) {
            return false;
        }
    }
    // Nothing may sit outside the weight window.
    for (const auto &[w, c] : lhs.coeffs()) {
        if (std::labs(w) > span) {
            return false;
        }
    }
    return true;
}

Polynomial elementary_schur(int m, int modes)
{
    if (m < 0) {
        throw std::invalid_argument("elementary Schur index must be >= 0, got " + std::to_string(m));
    }
    if (modes < 1) {
        throw std::invalid_argument("mode cutoff K must be >= 1, got " + std::to_string(modes));
    }
    std::vector<MultiIndex> indices;
    std::vector<MultiIndex::entry> parts;
    partitions(m, modes, parts, indices);
    Polynomial out;
    for (const auto &p : indices) {
        out.add_term(p, Scalar(1) / multiindex_factorial(p));
    }
    return out;
}

Scalar power_matrix_element(const OneParticleVector &u, int k, const OneParticleVector &v, int j, long w,
                            const BasisConfig &config, const Cutoffs &cutoffs)
{
    if (k < 0 || j < 0) {
        throw std::invalid_argument("power orders must be >= 0");
    }
    check_modes(config, cutoffs);
    const VertexPairings pr = vertex_pairings(u, v, config);

    // Q = t sum_n a_n z^n + s sum_n b_n z^-n
    TszSeries exponent(k, j);
    for (int n = 1; n <= config.modes(); ++n) {
        exponent.add({1, 0, n}, pr.creation[static_cast<std::size_t>(n - 1)]);
        exponent.add({0, 1, -n}, pr.annihilation[static_cast<std::size_t>(n - 1)]);
    }
    // <tu, sv> = t s <u, v> for real formal t, s
    TszSeries overlap(k, j);
    overlap.add({1, 1, 0}, pr.overlap);

    const TszSeries closed = truncated_exp_tsz(exponent, cutoffs.order, k, j)
                             * truncated_exp_tsz(overlap, cutoffs.order, k, j);
    return closed.coefficient({k, j, static_cast<int>(w)}) * factorial(static_cast<unsigned>(k))
           * factorial(static_cast<unsigned>(j));
}

} // namespace fockvx
