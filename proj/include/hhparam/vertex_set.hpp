#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hhparam {

using vertex_t = int;

/// Largest vertex count any Graph may have. Vertex subsets are single 64-bit words.
inline constexpr int max_vertices = 64;

/// A set of vertex ids in [0, 64), stored as a bitmask.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<vertex_t> vs) {
        for (vertex_t v : vs) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(vertex_t v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet of(const std::vector<vertex_t> &vs) {
        VertexSet s;
        for (vertex_t v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(vertex_t v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr vertex_t min() const { return std::countr_zero(bits_); }

    constexpr void insert(vertex_t v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(vertex_t v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet &) const = default;
    /// Orders by the integer value of the bitmask.
    constexpr std::strong_ordering operator<=>(const VertexSet &o) const { return bits_ <=> o.bits_; }

    class iterator {
       public:
        using value_type = vertex_t;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr vertex_t operator*() const { return std::countr_zero(rest_); }
        constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator &) const = default;

       private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<vertex_t> to_vector() const { return {begin(), end()}; }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (vertex_t v : *this) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

   private:
    std::uint64_t bits_ = 0;
};

/// Canonical order used by every enumeration that must be deterministic:
/// smaller sets first, equal sizes compared by their sorted member lists.
inline bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The lowest differing vertex decides: the set containing it is lexicographically smaller.
    return a.contains(std::countr_zero(diff));
}

/// Calls f on every subset of `ground` with at most `max_size` members, in canonical order.
/// Stops early and returns true as soon as f returns true.
template <typename F>
bool for_each_subset_canonical(VertexSet ground, int max_size, F &&f) {
    const std::vector<vertex_t> members = ground.to_vector();
    const int m = static_cast<int>(members.size());
    if (max_size > m) max_size = m;
    std::vector<int> idx;
    for (int size = 0; size <= max_size; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            VertexSet s;
            for (int i : idx) s.insert(members[i]);
            if (f(s)) return true;
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace hhparam

template <>
struct std::hash<hhparam::VertexSet> {
    std::size_t operator()(hhparam::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
