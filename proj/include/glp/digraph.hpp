#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glp/multiset.hpp"
#include "glp/vertex_set.hpp"

namespace glp {

using VertexMultiset = Multiset<VertexId>;

// Finite directed graph with named vertices, no self-loops and no parallel
// edges.  Immutable after construction.
//
// Vertices are re-indexed by lexicographic label order at construction, so the
// same graph always gets the same dense indices whatever order the input used.
class Digraph {
 public:
  Digraph() = default;
  // Throws PreconditionError on self-loops, duplicate edges, duplicate labels,
  // more than kMaxVertices vertices, or edges naming undeclared labels.
  Digraph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return labels_.size(); }
  VertexSet vertices() const { return VertexSet::full(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v.index); }

  std::optional<VertexId> find(std::string_view label) const;
  // Throws UnknownVertex.
  VertexId id(std::string_view label) const;

  bool has_edge(VertexId from, VertexId to) const { return out_[from.index].contains(to); }
  VertexSet out_neighbors(VertexId v) const { return out_[v.index]; }
  VertexSet in_neighbors(VertexId v) const { return in_[v.index]; }
  std::size_t edge_count() const;
  // Edges in (from, to) order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Throws UnknownVertex when `s` mentions a vertex outside the graph.
  void require_subset(VertexSet s) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.labels_ == b.labels_ && a.out_ == b.out_; }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Vertices reachable from `from` by directed paths inside `within`
// (`from` itself included when it lies in `within`).
VertexSet reachable_within(const Digraph& g, VertexId from, VertexSet within);

// Strongly connected components of the subgraph induced on `subset`, sorted by
// minimal vertex.  Throws UnknownVertex.
std::vector<VertexSet> strongly_connected_components(const Digraph& g, VertexSet subset);

// True for ∅ and singletons.  Throws UnknownVertex.
bool is_strongly_connected(const Digraph& g, VertexSet subset);

// All strongly connected nonempty subsets of `within`, in canonical set order.
std::vector<VertexSet> strongly_connected_subsets(const Digraph& g, VertexSet within);

// Weakly connected, 2(n-1) edges, every edge paired with its reverse.
bool is_tree(const Digraph& g);

// Canonical text rendering of a vertex set / vertex multiset: "{1,2,4}".
std::string format_set(const Digraph& g, VertexSet s);
std::string format_multiset(const Digraph& g, const VertexMultiset& m);

// Vertex multiset -> set of elements of multiplicity at least i.
VertexSet layer_set(const VertexMultiset& m, int i);
VertexMultiset to_multiset(VertexSet s);
// Support T<1>.
VertexSet support(const VertexMultiset& m);

}  // namespace glp
