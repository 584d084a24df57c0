#pragma once

#include <cstdint>
#include <random>

#include <fockvx/fock.hpp>
#include <fockvx/one_particle.hpp>
#include <fockvx/scalar.hpp>

namespace fockvx
{

// Seed-deterministic source of small exact inputs. Each draw reduces one
// std::mt19937_64 output modulo the range size, so sequences are identical
// across standard libraries: numerators in [-9, 9], denominators in [1, 9].
class RationalSampler
{
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [lo, hi].
    int uniform(int lo, int hi);
    Rational rational();
    // Independent real and imaginary parts.
    Scalar gaussian();
    // Every coordinate of the K-mode vector drawn independently.
    OneParticleVector vector(int modes);
    // Up to `terms` random monomials of degree <= max_degree with Gaussian coefficients.
    FockVector fock_vector(int modes, int max_degree, int terms);

private:
    std::mt19937_64 engine_;
};

} // namespace fockvx
