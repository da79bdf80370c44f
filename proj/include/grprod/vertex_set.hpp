#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace grprod {

/// Index of a vertex in declaration order.
using Vertex = std::size_t;

/// A set of vertices of one graph, stored as a 64-bit mask.
class VertexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool contains(Vertex v) const { return v < kCapacity && ((bits_ >> v) & 1U) != 0; }
  [[nodiscard]] constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  [[nodiscard]] constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; the set must be non-empty.
  [[nodiscard]] constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr VertexSet& insert(Vertex v) {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(Vertex v) {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }

  [[nodiscard]] constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  [[nodiscard]] constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  [[nodiscard]] constexpr Iterator begin() const { return Iterator(bits_); }
  [[nodiscard]] constexpr Iterator end() const { return Iterator(0); }

 private:
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `universe`, the empty set included.
template <typename F>
constexpr void for_each_subset(VertexSet universe, F&& f) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    f(VertexSet::from_bits(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace grprod
