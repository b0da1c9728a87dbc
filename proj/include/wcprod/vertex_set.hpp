#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wcprod {

using Vertex = int;

/// Largest vertex count handled by the bit-mask algorithms.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertices of one graph, stored as a 64-bit mask.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) noexcept { return VertexSet(std::uint64_t{1} << v); }

    /// The set {0, ..., n-1}.
    static constexpr VertexSet full(int n) noexcept {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(const std::vector<Vertex>& vertices) noexcept {
        VertexSet s;
        for (Vertex v : vertices) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    /// Lowest member; undefined on the empty set.
    constexpr Vertex first() const noexcept { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    /// Complement relative to {0, ..., n-1}.
    constexpr VertexSet complement(int n) const noexcept { return full(n) - *this; }

    constexpr bool operator==(const VertexSet&) const noexcept = default;
    constexpr auto operator<=>(const VertexSet&) const noexcept = default;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace wcprod
