#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace conerank {

inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitmask.
class FaceSet {
public:
    constexpr FaceSet() = default;
    constexpr explicit FaceSet(std::uint64_t bits) : bits_(bits) {}
    FaceSet(std::initializer_list<std::size_t> indices) {
        for (auto i : indices) insert(i);
    }

    static FaceSet from_indices(const std::vector<std::size_t>& indices) {
        FaceSet f;
        for (auto i : indices) f.insert(i);
        return f;
    }
    /// The set {0, ..., n-1}.
    static constexpr FaceSet range(std::size_t n) {
        return FaceSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr bool is_subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(FaceSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr FaceSet operator|(FaceSet o) const { return FaceSet(bits_ | o.bits_); }
    constexpr FaceSet operator&(FaceSet o) const { return FaceSet(bits_ & o.bits_); }
    constexpr FaceSet operator-(FaceSet o) const { return FaceSet(bits_ & ~o.bits_); }

    /// Smallest index, or 64 when empty.
    constexpr std::size_t first() const {
        return static_cast<std::size_t>(std::countr_zero(bits_));
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    constexpr bool operator==(const FaceSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending index sequences.
inline bool lex_less(FaceSet a, FaceSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        const auto i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

/// Canonical facet order: larger faces first, then lexicographic.
inline bool canonical_less(FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
}

/// Ideal-generator order: smaller supports first, then lexicographic.
inline bool generator_less(FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace conerank
