#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <fockvx/scalar.hpp>

namespace fockvx
{

// Finitely supported map mode (>= 1) -> exponent (>= 1), stored sorted by mode.
// Doubles as the monomial prod_k e_k^{p_k} and as one side of a tuple pair.
// Ordering is lexicographic on the (mode, exponent) sequence.
class MultiIndex
{
public:
    using entry = std::pair<int, int>;

    MultiIndex() = default;
    // Repeated modes are merged, zero exponents dropped.
    // Throws std::invalid_argument for mode < 1 or exponent < 0.
    MultiIndex(std::initializer_list<entry> entries);
    explicit MultiIndex(std::vector<entry> entries);

    static MultiIndex unit(int mode) { return MultiIndex{{mode, 1}}; }

    std::span<const entry> entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int exponent(int mode) const;
    int degree() const;
    long weight() const;
    // 0 for the empty index.
    int max_mode() const { return entries_.empty() ? 0 : entries_.back().first; }

    // Exponent-wise sum (monomial product).
    MultiIndex operator+(const MultiIndex &other) const;
    // Lowers the exponent of `mode` by one; requires exponent(mode) >= 1.
    MultiIndex lowered(int mode) const;

    friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

    // "{1:2, 3:1}"
    std::string to_string() const;

private:
    std::vector<entry> entries_;
};

// prod_k p_k!
Scalar multiindex_factorial(const MultiIndex &p);

} // namespace fockvx
