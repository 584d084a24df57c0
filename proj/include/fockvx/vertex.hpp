#pragma once

// Laurent coefficients S_w of the vertex operator
//   V(z) = exp(sum_n z^n f_n) exp(sum_n z^-n g_n*)
// truncated at mode cutoff K, expansion order M and Fock degree D.
//
// Pairing conventions (inner product antilinear in its first slot):
//   creation side     a_k = <u, f_k>
//   annihilation side b_k = <g_k, v>
// so that <e^u, (prod f^p)(prod g^q)* e^v> = a^p b^q e^{<u,v>} holds exactly.

#include <vector>

#include <fockvx/basis.hpp>
#include <fockvx/fock.hpp>
#include <fockvx/laurent.hpp>
#include <fockvx/one_particle.hpp>
#include <fockvx/polynomial.hpp>
#include <fockvx/tuples.hpp>

namespace fockvx
{

// coeff * (prod_k f_k^{p_k}) (prod_k g_k^{q_k})*, coeff = 1 / (p! q!)
struct SchurTerm {
    MultiIndex p;
    MultiIndex q;
    Scalar coeff;

    friend bool operator==(const SchurTerm &, const SchurTerm &) = default;
};

struct SchurOperator {
    long w = 0;
    Cutoffs cutoffs;
    std::vector<SchurTerm> terms;

    friend bool operator==(const SchurOperator &, const SchurOperator &) = default;
};

// Matrix element of V(z) between truncated coherent vectors, as a Laurent polynomial in z.
struct LaurentSlice {
    LaurentPolynomial coeffs;
    Cutoffs cutoffs;

    friend bool operator==(const LaurentSlice &, const LaurentSlice &) = default;
};

struct VertexPairings {
    std::vector<Scalar> creation;     // a_1..a_K
    std::vector<Scalar> annihilation; // b_1..b_K
    Scalar overlap;                   // <u, v>
};

// Throws std::out_of_range if u or v has a coordinate beyond the basis modes.
VertexPairings vertex_pairings(const OneParticleVector &u, const OneParticleVector &v, const BasisConfig &config);

// P(z) = sum_{n<=K} (a_n z^n + b_n z^-n)
LaurentPolynomial vertex_exponent(const VertexPairings &pairings);

// Terms of S_w for m = 0..M over modes 1..K, in enumeration order.
SchurOperator schur_terms(long w, const Cutoffs &cutoffs);

// S applied to v: annihilation part first, then the creation monomial; output
// truncated to degree <= D. Throws std::invalid_argument when deg v > D.
FockVector apply_schur(const SchurOperator &op, const FockVector &v, const BasisConfig &config, int max_degree);

// exp_M(P(z)) scaled by the partial sum E_M(<u, v>) standing in for e^{<u,v>}.
LaurentSlice matrix_element_closed(const OneParticleVector &u, const OneParticleVector &v,
                                   const BasisConfig &config, const Cutoffs &cutoffs);

// sum over (p,q) of order m and weight w of a^p b^q / (p! q!), without the e^{<u,v>} factor.
Scalar matrix_element_expansion(const OneParticleVector &u, const OneParticleVector &v, long w, int m,
                                const BasisConfig &config);

// The same matrix element restricted to what survives degree truncation:
//   sum_{m<=M} sum_{(p,q), |p|<=D, |q|<=D} a^p b^q / (p! q!) * E_{D - max(|p|,|q|)}(<u, v>)
// which is exactly <coherent(u,D), S_w coherent(v,D)> computed through scalars only.
Scalar matrix_element_degree_matched(const OneParticleVector &u, const OneParticleVector &v, long w,
                                     const BasisConfig &config, const Cutoffs &cutoffs);

// [z^w] P(z)^m / m! == matrix_element_expansion(u, v, w, m) for every |w| <= K m.
bool verify_lemma_term(const OneParticleVector &u, const OneParticleVector &v, int m, const BasisConfig &config);

// S_m(x) = sum_{weight(p) = m, support <= K} x^p / p!
Polynomial elementary_schur(int m, int modes);

// <u^k, V(z) v^j> at weight w: k! j! [t^k s^j z^w] of the closed form for the
// coherent pair (t u, s v), by coefficient extraction in exact formal variables.
// Exact against the Fock route once M >= k + j.
Scalar power_matrix_element(const OneParticleVector &u, int k, const OneParticleVector &v, int j, long w,
                            const BasisConfig &config, const Cutoffs &cutoffs);

} // namespace fockvx
