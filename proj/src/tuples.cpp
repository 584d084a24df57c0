#include <fockvx/tuples.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include <fockvx/basis.hpp>

namespace fockvx
{

void Cutoffs::validate() const
{
    if (modes < 1) {
        throw config_error("mode cutoff K must be >= 1, got " + std::to_string(modes));
    }
    if (order < 0) {
        throw config_error("order cutoff M must be >= 0, got " + std::to_string(order));
    }
    if (degree < 0) {
        throw config_error("degree cutoff D must be >= 0, got " + std::to_string(degree));
    }
}

namespace
{

void check_args(int m, int modes)
{
    if (m < 0) {
        throw std::invalid_argument("order m must be >= 0, got " + std::to_string(m));
    }
    if (modes < 1) {
        throw std::invalid_argument("mode cutoff K must be >= 1, got " + std::to_string(modes));
    }
}

// Distributes the remaining degree over slots (mode, side), modes ascending,
// p-side before q-side within a mode.
class Enumerator
{
public:
    Enumerator(int modes, std::vector<TuplePair> &out) : modes_(modes), out_(out) {}

    void run(int m, long w)
    {
        recurse(1, m, w);
    }

private:
    void recurse(int mode, int remaining, long target)
    {
        if (remaining == 0) {
            if (target == 0) {
                out_.push_back({MultiIndex(p_), MultiIndex(q_)});
            }
            return;
        }
        if (mode > modes_) {
            return;
        }
        // Every remaining unit shifts the weight by at most K in either direction.
        if (std::labs(target) > static_cast<long>(modes_) * remaining) {
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            for (int b = 0; a + b <= remaining; ++b) {
                if (a != 0) {
                    p_.emplace_back(mode, a);
                }
                if (b != 0) {
                    q_.emplace_back(mode, b);
                }
                recurse(mode + 1, remaining - a - b, target - static_cast<long>(mode) * (a - b));
                if (a != 0) {
                    p_.pop_back();
                }
                if (b != 0) {
                    q_.pop_back();
                }
            }
        }
    }

    int modes_;
    std::vector<TuplePair> &out_;
    std::vector<MultiIndex::entry> p_;
    std::vector<MultiIndex::entry> q_;
};

} // namespace

std::vector<TuplePair> enumerate_pq(int m, long w, int modes)
{
    check_args(m, modes);
    std::vector<TuplePair> out;
    if (std::labs(w) > static_cast<long>(modes) * m) {
        return out;
    }
    Enumerator(modes, out).run(m, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_pq(int m, long w, int modes)
{
    check_args(m, modes);
    const long span = static_cast<long>(modes) * m;
    if (std::labs(w) > span) {
        return 0;
    }
    // ways[d][w + span]: pairs over the modes processed so far with order d, weight w.
    const auto width = static_cast<std::size_t>(2 * span + 1);
    std::vector<std::vector<std::uint64_t>> ways(static_cast<std::size_t>(m) + 1,
                                                 std::vector<std::uint64_t>(width, 0));
    ways[0][static_cast<std::size_t>(span)] = 1;
    for (int k = 1; k <= modes; ++k) {
        // Multiply by 1 / ((1 - x z^k)(1 - x z^-k)): one geometric factor per side.
        for (const int step : {k, -k}) {
            for (int d = 1; d <= m; ++d) {
                for (long idx = 0; idx < static_cast<long>(width); ++idx) {
                    const long src = idx - step;
                    if (src < 0 || src >= static_cast<long>(width)) {
                        continue;
                    }
                    auto &cell = ways[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)];
                    const auto add = ways[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(src)];
                    if (__builtin_add_overflow(cell, add, &cell)) {
                        throw std::overflow_error("count_pq overflowed 64 bits");
                    }
                }
            }
        }
    }
    return ways[static_cast<std::size_t>(m)][static_cast<std::size_t>(w + span)];
}

} // namespace fockvx
