#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "glp/checked.hpp"
#include "glp/error.hpp"

namespace glp {

// Finite multiset over an ordered element type.
//
// Only positive multiplicities are stored.  Equivalently a multiset S is the
// descending chain of layers S<1> ⊇ S<2> ⊇ ..., where S<i> collects the
// elements of multiplicity at least i; layer() exposes that view.
template <class T>
class Multiset {
 public:
  using Count = std::int32_t;
  using const_iterator = typename std::map<T, Count>::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<T> elements) {
    for (const T& x : elements) add(x);
  }
  template <class It>
  Multiset(It first, It last) {
    for (; first != last; ++first) add(*first);
  }

  void add(const T& x, Count k = 1) {
    if (k < 0) throw PreconditionError("negative multiplicity");
    if (k == 0) return;
    Count& c = entries_[x];
    c = checked_add(c, k);
  }

  Count multiplicity(const T& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
  }
  bool contains(const T& x) const { return entries_.count(x) != 0; }

  bool empty() const { return entries_.empty(); }
  // Number of distinct elements.
  std::size_t distinct() const { return entries_.size(); }
  // Number of elements counted with multiplicity.
  std::int64_t total() const {
    std::int64_t n = 0;
    for (const auto& [x, c] : entries_) n += c;
    return n;
  }
  Count max_multiplicity() const {
    Count m = 0;
    for (const auto& [x, c] : entries_) m = std::max(m, c);
    return m;
  }

  // The layer S<i> (1-based): elements with multiplicity at least i.
  std::vector<T> layer(Count i) const {
    std::vector<T> out;
    for (const auto& [x, c] : entries_)
      if (c >= i) out.push_back(x);
    return out;
  }

  // Layerwise containment: every multiplicity in *this is <= the one in `other`.
  bool is_contained_in(const Multiset& other) const {
    for (const auto& [x, c] : entries_)
      if (other.multiplicity(x) < c) return false;
    return true;
  }

  // Disjoint supports.
  bool is_disjoint_from(const Multiset& other) const {
    for (const auto& [x, c] : entries_)
      if (other.contains(x)) return false;
    return true;
  }

  // Elements with repetition, in element order.
  std::vector<T> elements() const {
    std::vector<T> out;
    for (const auto& [x, c] : entries_) out.insert(out.end(), static_cast<std::size_t>(c), x);
    return out;
  }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  Multiset& operator+=(const Multiset& other) {
    for (const auto& [x, c] : other.entries_) add(x, c);
    return *this;
  }
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }

  // Removes one copy of `x`; throws ContainmentError when absent.
  void remove(const T& x, Count k = 1) {
    auto it = entries_.find(x);
    if (it == entries_.end() || it->second < k) throw ContainmentError("multiset subtraction: element not contained");
    it->second -= k;
    if (it->second == 0) entries_.erase(it);
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) { return a.entries_ <=> b.entries_; }

 private:
  std::map<T, Count> entries_;
};

template <class T>
Multiset<T> multiset_sum(const Multiset<T>& a, const Multiset<T>& b) {
  return a + b;
}

// a - b; throws ContainmentError when b is not contained in a.
template <class T>
Multiset<T> multiset_subtract(const Multiset<T>& a, const Multiset<T>& b) {
  if (!b.is_contained_in(a)) throw ContainmentError("multiset subtraction: subtrahend not contained");
  Multiset<T> out = a;
  for (const auto& [x, c] : b) out.remove(x, c);
  return out;
}

}  // namespace glp
