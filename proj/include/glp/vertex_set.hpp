#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace glp {

// Graphs are desk-scale; every vertex set fits in one machine word and every
// exponent vector in a fixed array.
inline constexpr std::size_t kMaxVertices = 16;

// Dense vertex index into a Digraph.  Indices follow lexicographic label order.
struct VertexId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

// Subset of the vertices of a graph, stored as a bit mask.
//
// Ordering is the canonical set order used for rendering and for every
// deterministic choice in the library: by size, then lexicographically on the
// sorted vertex list.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) insert(v);
  }

  static constexpr VertexSet singleton(VertexId v) { return VertexSet(std::uint64_t{1} << v.index); }
  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v.index) & 1u; }
  constexpr bool contains(VertexSet s) const { return (s.bits_ & ~bits_) == 0; }
  constexpr bool intersects(VertexSet s) const { return (s.bits_ & bits_) != 0; }

  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v.index; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v.index); }

  // Smallest vertex; undefined on the empty set.
  constexpr VertexId min() const { return VertexId{static_cast<std::uint32_t>(std::countr_zero(bits_))}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i <=> j;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }

  class iterator {
   public:
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr VertexId operator*() const { return VertexId{static_cast<std::uint32_t>(std::countr_zero(rest_))}; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Calls fn(sub) for every subset of `s`, in increasing bit-mask order,
// including the empty set and `s` itself.
template <class Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  std::uint64_t m = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(VertexSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace glp

template <>
struct std::hash<glp::VertexSet> {
  std::size_t operator()(glp::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
