#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fockvx/one_particle.hpp>
#include <fockvx/scalar.hpp>

namespace fockvx
{

using Matrix = std::vector<std::vector<Scalar>>;

// Invalid run configuration: bad cutoffs, non-orthonormal basis, malformed config input.
class config_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Matrix identity_matrix(int n);

// First row r (0-based) for which <row_r, row_c> != delta_rc for some c <= r, if any.
std::optional<int> first_non_orthonormal_row(const Matrix &rows);

// The two orthonormal systems {f_n} and {g_n}: row n-1 of F (resp. G) holds the
// reference-basis coordinates of f_n (resp. g_n).
class BasisConfig
{
public:
    // Throws config_error on shape mismatch or when a system is not exactly orthonormal.
    BasisConfig(Matrix f, Matrix g);

    static BasisConfig identity(int modes);

    int modes() const { return modes_; }
    const Matrix &f_matrix() const { return f_; }
    const Matrix &g_matrix() const { return g_; }

    // 1-based
    OneParticleVector f(int n) const;
    OneParticleVector g(int n) const;

    bool is_identity() const;

private:
    int modes_;
    Matrix f_;
    Matrix g_;
};

} // namespace fockvx
