#include <fockvx/multi_index.hpp>

#include <algorithm>
#include <stdexcept>

namespace fockvx
{

MultiIndex::MultiIndex(std::initializer_list<entry> entries) : MultiIndex(std::vector<entry>(entries)) {}

MultiIndex::MultiIndex(std::vector<entry> entries)
{
    for (const auto &[mode, exp] : entries) {
        if (mode < 1) {
            throw std::invalid_argument("multi-index mode must be >= 1, got " + std::to_string(mode));
        }
        if (exp < 0) {
            throw std::invalid_argument("multi-index exponent must be >= 0, got " + std::to_string(exp));
        }
    }
    std::sort(entries.begin(), entries.end());
    for (const auto &[mode, exp] : entries) {
        if (exp == 0) {
            continue;
        }
        if (!entries_.empty() && entries_.back().first == mode) {
            entries_.back().second += exp;
        } else {
            entries_.emplace_back(mode, exp);
        }
    }
}

int MultiIndex::exponent(int mode) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), entry{mode, 0});
    return it != entries_.end() && it->first == mode ? it->second : 0;
}

int MultiIndex::degree() const
{
    int d = 0;
    for (const auto &e : entries_) {
        d += e.second;
    }
    return d;
}

long MultiIndex::weight() const
{
    long w = 0;
    for (const auto &[mode, exp] : entries_) {
        w += static_cast<long>(mode) * exp;
    }
    return w;
}

MultiIndex MultiIndex::operator+(const MultiIndex &other) const
{
    MultiIndex out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

MultiIndex MultiIndex::lowered(int mode) const
{
    MultiIndex out = *this;
    const auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), entry{mode, 0});
    if (it == out.entries_.end() || it->first != mode) {
        throw std::invalid_argument("cannot lower absent mode " + std::to_string(mode));
    }
    if (--it->second == 0) {
        out.entries_.erase(it);
    }
    return out;
}

std::string MultiIndex::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += std::to_string(entries_[i].first) + ":" + std::to_string(entries_[i].second);
    }
    return s + "}";
}

Scalar multiindex_factorial(const MultiIndex &p)
{
    mpz_class prod = 1;
    mpz_class f;
    for (const auto &[mode, exp] : p.entries()) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(exp));
        prod *= f;
    }
    return Scalar(Rational(prod));
}

} // namespace fockvx
