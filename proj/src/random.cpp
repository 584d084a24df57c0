#include <fockvx/random.hpp>

#include <vector>

namespace fockvx
{

int RationalSampler::uniform(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Rational RationalSampler::rational()
{
    const int num = uniform(-9, 9);
    const int den = uniform(1, 9);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Scalar RationalSampler::gaussian()
{
    Rational re = rational();
    Rational im = rational();
    return Scalar(std::move(re), std::move(im));
}

OneParticleVector RationalSampler::vector(int modes)
{
    OneParticleVector v(modes);
    for (int k = 1; k <= modes; ++k) {
        v.set(k, gaussian());
    }
    return v;
}

FockVector RationalSampler::fock_vector(int modes, int max_degree, int terms)
{
    FockVector out;
    for (int t = 0; t < terms; ++t) {
        const int degree = uniform(0, max_degree);
        std::vector<MultiIndex::entry> entries;
        for (int i = 0; i < degree; ++i) {
            entries.emplace_back(uniform(1, modes), 1);
        }
        out.add_term(MultiIndex(std::move(entries)), gaussian());
    }
    return out;
}

} // namespace fockvx
