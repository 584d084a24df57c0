#include <fockvx/one_particle.hpp>

#include <stdexcept>
#include <string>

namespace fockvx
{

OneParticleVector::OneParticleVector(int modes) : modes_(modes)
{
    if (modes < 1) {
        throw std::invalid_argument("one-particle space needs at least one mode, got " + std::to_string(modes));
    }
}

OneParticleVector::OneParticleVector(int modes, std::initializer_list<std::pair<int, Scalar>> coords)
    : OneParticleVector(modes)
{
    for (const auto &[mode, value] : coords) {
        set(mode, coord(mode) + value);
    }
}

OneParticleVector OneParticleVector::basis(int modes, int n)
{
    OneParticleVector v(modes);
    v.set(n, 1);
    return v;
}

void OneParticleVector::check_mode(int mode) const
{
    if (mode < 1 || mode > modes_) {
        throw std::out_of_range("mode " + std::to_string(mode) + " outside 1.." + std::to_string(modes_));
    }
}

Scalar OneParticleVector::coord(int mode) const
{
    check_mode(mode);
    const auto it = coords_.find(mode);
    return it == coords_.end() ? Scalar{} : it->second;
}

void OneParticleVector::set(int mode, const Scalar &value)
{
    check_mode(mode);
    if (value.is_zero()) {
        coords_.erase(mode);
    } else {
        coords_[mode] = value;
    }
}

OneParticleVector &OneParticleVector::operator+=(const OneParticleVector &o)
{
    if (o.modes_ != modes_) {
        throw std::invalid_argument("mode count mismatch in one-particle sum");
    }
    for (const auto &[mode, value] : o.coords_) {
        set(mode, coord(mode) + value);
    }
    return *this;
}

OneParticleVector &OneParticleVector::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        coords_.clear();
    }
    for (auto &[mode, value] : coords_) {
        value *= s;
    }
    return *this;
}

Scalar inner(const OneParticleVector &x, const OneParticleVector &y)
{
    Scalar acc;
    for (const auto &[mode, value] : x.coords()) {
        const auto it = y.coords().find(mode);
        if (it != y.coords().end()) {
            acc += value.conj() * it->second;
        }
    }
    return acc;
}

} // namespace fockvx
