#pragma once

// Tuple pairs (p, q) of exponent maps over modes 1..K, graded by
// order m = |p| + |q| and weight w = weight(p) - weight(q).

#include <compare>
#include <cstdint>
#include <vector>

#include <fockvx/multi_index.hpp>

namespace fockvx
{

struct Cutoffs {
    int modes = 2;  // K
    int order = 4;  // M, expansion order m <= M
    int degree = 3; // D, degree bound on Fock vectors

    // Throws config_error unless K >= 1, M >= 0, D >= 0.
    void validate() const;

    friend bool operator==(const Cutoffs &, const Cutoffs &) = default;
};

struct TuplePair {
    MultiIndex p;
    MultiIndex q;

    int order() const { return p.degree() + q.degree(); }
    long weight() const { return p.weight() - q.weight(); }

    friend auto operator<=>(const TuplePair &, const TuplePair &) = default;
    friend bool operator==(const TuplePair &, const TuplePair &) = default;
};

// All pairs supported in modes 1..K with order m and weight w, sorted by (p, q).
// Throws std::invalid_argument when m < 0 or K < 1.
std::vector<TuplePair> enumerate_pq(int m, long w, int modes);

// Cardinality of enumerate_pq(m, w, K), counted by a generating-function recursion
// that never materialises the pairs. Throws std::overflow_error past 2^64.
std::uint64_t count_pq(int m, long w, int modes);

} // namespace fockvx
