#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace ckspectra {

/// Hard ceiling on graph size imposed by the bitmask representation.
inline constexpr std::size_t kMaxVertices = 64;

/// Index of a vertex in its graph's declaration order.
struct Vertex {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

/// Subset of a graph's vertices, stored as a bitmask over declaration order.
/// Iteration and comparison follow that order, so output built from a
/// VertexSet is deterministic.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

        constexpr Vertex operator*() const noexcept {
            return Vertex{static_cast<std::uint32_t>(std::countr_zero(rest_))};
        }
        constexpr iterator& operator++() noexcept {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept {
            auto old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() noexcept = default;
    constexpr VertexSet(std::initializer_list<Vertex> vs) noexcept {
        for (Vertex v : vs)
            insert(v);
    }

    static constexpr VertexSet from_bits(std::uint64_t bits) noexcept {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet first_n(std::size_t n) noexcept {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v.index) & 1U; }
    constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v.index; }
    constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v.index); }

    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Lowest-indexed member; undefined on the empty set.
    constexpr Vertex front() const noexcept { return *begin(); }

    constexpr iterator begin() const noexcept { return iterator{bits_}; }
    constexpr iterator end() const noexcept { return iterator{}; }

    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return a -= b; }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
    /// Canonical order: by bitmask value.
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) noexcept {
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

} // namespace ckspectra
