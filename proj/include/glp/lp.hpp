#pragma once

#include <compare>
#include <functional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glp/digraph.hpp"
#include "glp/laurent.hpp"

namespace glp {

// Edge of a multifunction: either a loop (from == to) or an edge of the graph.
struct Edge {
  VertexId from;
  VertexId to;

  bool is_loop() const { return from == to; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed multigraph on V whose out-degree at v equals the multiplicity of v
// in the domain, and whose non-loop edges are edges of the graph.
class Multifunction {
 public:
  Multifunction() = default;
  // Throws PreconditionError when the out-degree or edge conditions fail.
  Multifunction(const Digraph& g, VertexMultiset domain, Multiset<Edge> edges);
  // The function v -> image[k] for the k-th vertex v of `domain`.
  static Multifunction from_function(const Digraph& g, VertexSet domain, std::span<const VertexId> image);

  const VertexMultiset& domain() const { return domain_; }
  const Multiset<Edge>& edges() const { return edges_; }
  std::size_t universe() const { return n_; }

  // True when the only cycles are loops.
  bool is_acyclic() const;

  friend Multifunction operator+(const Multifunction& f, const Multifunction& g);
  friend bool operator==(const Multifunction&, const Multifunction&) = default;

 private:
  std::size_t n_ = 0;
  VertexMultiset domain_;
  Multiset<Edge> edges_;
};

Multifunction multifunction_sum(const Multifunction& f, const Multifunction& g);

// ∏ over edges of X_w (edge v->w) or A_v (loop at v).
LaurentPoly weight(const Multifunction& f);
// weight(f) / ∏_{v ∈ domain} X_v.
LaurentPoly normalized_weight(const Multifunction& f);

// A function on a vertex set, given as the image of each domain vertex in
// increasing vertex order.
using FunctionImage = std::vector<VertexId>;

// Periodic-part test: follows v, f(v), f²(v), ... from every v and rejects a
// repeat whose period is at least 2.  Values outside `domain` end the walk.
bool is_acyclic_function(VertexSet domain, std::span<const VertexId> image);

// Calls fn(image) for every function f on I (each v mapped to itself or an
// out-neighbour) whose only cycles are loops, in lexicographic order of the
// choice vector (loop first, then out-neighbours by vertex order).  Cycles are
// pruned as soon as a partial assignment closes one.
void for_each_acyclic_function(const Digraph& g, VertexSet domain, const std::function<void(const FunctionImage&)>& fn);
std::vector<Multifunction> enumerate_acyclic_functions(const Digraph& g, VertexSet domain);

// Every function on I, acyclic or not, in the same order.
void for_each_function(const Digraph& g, VertexSet domain, const std::function<void(const FunctionImage&)>& fn);

// Σ over acyclic functions on I of their normalized weights.
LaurentPoly compute_Y(const Digraph& g, VertexSet subset);

// Thread-safe memo table of Y_I for one graph.  Inserts are idempotent, so
// concurrent readers and writers only ever observe the same value per key.
class YCache {
 public:
  explicit YCache(const Digraph& g) : g_(g) {}
  YCache(const YCache&) = delete;
  YCache& operator=(const YCache&) = delete;

  const Digraph& graph() const { return g_; }
  const LaurentPoly& y(VertexSet subset) const;
  std::size_t size() const;

 private:
  const Digraph& g_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<VertexSet, LaurentPoly> table_;
};

// The SCCs J of the subgraph induced on I, each paired with Y_J.  The product
// of the factors is Y_I.
std::vector<std::pair<VertexSet, LaurentPoly>> y_scc_factorization(const Digraph& g, VertexSet subset);

// A directed cycle of length >= 2, rotated to start at its minimal vertex.
struct Cycle {
  std::vector<VertexId> vertices;

  VertexSet vertex_set() const;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Pairwise vertex-disjoint cycles in increasing minimal-vertex order.
struct CycleFamily {
  std::vector<Cycle> cycles;

  VertexSet vertex_set() const;
  friend bool operator==(const CycleFamily&, const CycleFamily&) = default;
};

// All simple cycles of length >= 2 in the subgraph induced on S, sorted.
std::vector<Cycle> enumerate_cycles(const Digraph& g, VertexSet subset);
// All families of vertex-disjoint cycles in the induced subgraph on S,
// starting with the empty family.
std::vector<CycleFamily> enumerate_cycle_families(const Digraph& g, VertexSet subset);
// Number of cycle families per covered vertex set.
std::vector<std::pair<VertexSet, std::int64_t>> cycle_family_covers(const Digraph& g, VertexSet subset);

// Splits a function on S into its cycle family and the acyclic function on the
// remaining vertices (image entries listed for S minus the cycles).
std::pair<CycleFamily, FunctionImage> decompose_function(VertexSet domain, std::span<const VertexId> image);

}  // namespace glp
