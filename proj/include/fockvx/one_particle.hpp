#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include <fockvx/scalar.hpp>

namespace fockvx
{

// Vector of the K-mode one-particle space, in the orthonormal reference basis e_1..e_K.
class OneParticleVector
{
public:
    explicit OneParticleVector(int modes);
    OneParticleVector(int modes, std::initializer_list<std::pair<int, Scalar>> coords);

    // e_n
    static OneParticleVector basis(int modes, int n);

    int modes() const { return modes_; }
    const std::map<int, Scalar> &coords() const { return coords_; }
    Scalar coord(int mode) const;
    bool is_zero() const { return coords_.empty(); }

    // Throws std::out_of_range naming the mode when it lies outside 1..K.
    void set(int mode, const Scalar &value);

    OneParticleVector &operator+=(const OneParticleVector &o);
    OneParticleVector &operator*=(const Scalar &s);
    friend OneParticleVector operator+(OneParticleVector a, const OneParticleVector &b) { return a += b; }
    friend OneParticleVector operator*(const Scalar &s, OneParticleVector a) { return a *= s; }

    friend bool operator==(const OneParticleVector &, const OneParticleVector &) = default;

private:
    void check_mode(int mode) const;

    int modes_;
    std::map<int, Scalar> coords_;
};

// <x, y> = sum_k conj(x_k) y_k; antilinear in the first argument.
Scalar inner(const OneParticleVector &x, const OneParticleVector &y);

} // namespace fockvx
