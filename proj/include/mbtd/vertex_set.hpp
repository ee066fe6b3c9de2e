#pragma once

#include <bit>
#include <cstdint>

namespace mbtd {

// Hard limit on graph order: vertex sets are packed into one 64-bit word.
inline constexpr int kMaxVertices = 64;

// Subset of {0, ..., n-1}. All operations are pure; the wrapped word is the
// canonical representation, so equality and hashing are trivial.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet of_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr VertexSet single(int v) { return of_bits(std::uint64_t{1} << v); }

    static constexpr VertexSet full(int n) {
        return of_bits(n >= kMaxVertices ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr VertexSet with(int v) const { return of_bits(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return of_bits(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return of_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return of_bits(bits_ & o.bits_); }
    // Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return of_bits(bits_ & ~o.bits_); }

    constexpr VertexSet complement(int n) const { return full(n) - *this; }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr bool operator==(const VertexSet&) const = default;

    // Iterates members in ascending order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace mbtd
