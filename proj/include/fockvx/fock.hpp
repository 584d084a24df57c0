#pragma once

// The Bose algebra over a K-mode one-particle space, realised as the polynomial
// algebra in the reference modes e_1..e_K with vacuum = constant 1.

#include <fockvx/one_particle.hpp>
#include <fockvx/polynomial.hpp>
#include <fockvx/scalar.hpp>

namespace fockvx
{

using FockVector = Polynomial;

inline FockVector vacuum()
{
    return FockVector::one();
}

// Degree-one element sum_k x_k e_k.
FockVector embed(const OneParticleVector &x);
// x^n in the algebra.
FockVector power(const OneParticleVector &x, int n);

inline FockVector fock_mul(const FockVector &a, const FockVector &b)
{
    return a * b;
}

// <e^p, e^q> = delta_pq p!, antilinear in a.
Scalar inner(const FockVector &a, const FockVector &b);

// x* a: the adjoint of multiplication by x, a derivation with x* e_k = conj(x_k).
FockVector annihilate(const OneParticleVector &x, const FockVector &a);
// e_k* a
FockVector annihilate_mode(int mode, const FockVector &a);

// sum_{n=0}^{D} u^n / n!
FockVector coherent(const OneParticleVector &u, int max_degree);

// (x^n)* applied to coherent(w, D). Zero when D < n.
FockVector power_annihilate_coherent(const OneParticleVector &x, int n, const OneParticleVector &w, int max_degree);

// sum_{i=0}^{deg a} (w*)^i a / i!
FockVector exp_annihilate(const OneParticleVector &w, const FockVector &a);

// <e^u, f g> == <e^u, f> <e^u, g> with e^u truncated at D.
// Throws std::invalid_argument when deg f + deg g > D.
bool check_multiplicability(const OneParticleVector &u, const FockVector &f, const FockVector &g, int max_degree);

} // namespace fockvx
