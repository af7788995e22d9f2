#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace setcolor {

/// A set of colors drawn from {1, ..., 64}, stored as a bitmask (color c is bit c-1).
class ColorSet {
public:
    static constexpr int kMaxColor = 64;

    constexpr ColorSet() = default;
    ColorSet(std::initializer_list<int> colors) {
        for (int c : colors) insert(c);
    }

    static constexpr ColorSet from_bits(std::uint64_t bits) {
        ColorSet s;
        s.bits_ = bits;
        return s;
    }

    /// All colors lo..hi inclusive; empty when lo > hi.
    static ColorSet range(int lo, int hi) {
        ColorSet s;
        for (int c = lo; c <= hi; ++c) s.insert(c);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    bool contains(int c) const {
        return valid(c) && ((bits_ >> (c - 1)) & 1U) != 0;
    }
    void insert(int c) {
        check(c);
        bits_ |= bit(c);
    }
    void erase(int c) {
        if (valid(c)) bits_ &= ~bit(c);
    }

    /// Smallest color; throws on the empty set.
    int min() const {
        if (empty()) throw std::logic_error("min() of empty ColorSet");
        return std::countr_zero(bits_) + 1;
    }

    /// The k smallest colors (all of them when k >= size()).
    ColorSet lowest(int k) const {
        ColorSet out;
        std::uint64_t rest = bits_;
        for (int i = 0; i < k && rest != 0; ++i) {
            std::uint64_t low = rest & (~rest + 1);
            out.bits_ |= low;
            rest &= rest - 1;
        }
        return out;
    }

    constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ColorSet other) const { return (bits_ & other.bits_) != 0; }

    std::vector<int> colors() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr ColorSet operator-(ColorSet o) const { return from_bits(bits_ & ~o.bits_); }
    ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }
    ColorSet& operator&=(ColorSet o) { bits_ &= o.bits_; return *this; }
    ColorSet& operator-=(ColorSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const ColorSet&) const = default;
    constexpr auto operator<=>(const ColorSet&) const = default;

    std::string to_string() const;

private:
    static constexpr bool valid(int c) { return c >= 1 && c <= kMaxColor; }
    static void check(int c) {
        if (!valid(c)) throw std::out_of_range("color " + std::to_string(c) + " outside 1..64");
    }
    static constexpr std::uint64_t bit(int c) { return std::uint64_t{1} << (c - 1); }

    std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, ColorSet s);

/// Calls fn(subset) for every k-element subset of `from`, in lexicographic order of
/// the sorted color sequences (lowest colors first). Stops early when fn returns false.
template <typename Fn>
bool for_each_subset(ColorSet from, int k, Fn&& fn) {
    std::vector<int> pool = from.colors();
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        ColorSet s;
        for (int i : idx) s.insert(pool[static_cast<std::size_t>(i)]);
        if (!fn(s)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace setcolor
