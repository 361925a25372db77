#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "glp/digraph.hpp"

namespace glp {

// Multiset of vertex sets: nested multicollections, Y-monomial indices.
using SetMultiset = Multiset<VertexSet>;

// How condition (N2) is checked.
enum class N2Check {
  // Each member strongly connected, and for every member J (plus a virtual
  // root over everything) the maximal members strictly inside J are the SCCs
  // of their union.  Polynomial in the number of members.
  siblings,
  // Literal quantifier over every subfamily of pairwise-disjoint members.
  full,
};

// (N1) pairwise nested-or-disjoint and (N2) on the support of `members`.
// The empty set is ignored.  Throws UnknownVertex.
bool is_nested(const Digraph& g, const SetMultiset& members, N2Check mode = N2Check::siblings);
bool is_nested(const Digraph& g, const std::vector<VertexSet>& members, N2Check mode = N2Check::siblings);

// Σ_i SCC(T<i>): the unique nested multicollection summing to T.
SetMultiset multiset_to_nested(const Digraph& g, const VertexMultiset& t);
// Σ_{I ∈ N} I.
VertexMultiset nested_to_multiset(const SetMultiset& n);

// Every nested collection (sets, no multiplicities) on W that is maximal
// under inclusion.  Enumerated through the multiset correspondence: each
// nested collection N on W is multiset_to_nested(ΣN), so the candidates are
// the multisets T on W with multiplicities <= |W| whose image is set-like.
// Each collection is sorted in canonical set order; the list is sorted.
std::vector<std::vector<VertexSet>> enumerate_maximal_nested_collections(const Digraph& g, VertexSet w);

// Independent enumerator: grows collections from the strongly connected
// subsets of W directly and keeps the maximal ones.  Same output contract.
std::vector<std::vector<VertexSet>> enumerate_maximal_nested_collections_direct(const Digraph& g, VertexSet w);

// Index (U, S) of the monomial ∏_{v∈U} X_v ∏_{I∈S} Y_I.
struct MonomialIndex {
  VertexMultiset u;
  SetMultiset s;

  friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

// Cluster monomial ∏_{v∈U} X_v ∏_{I∈N} Y_I with N the nested multicollection
// summing to T.  U and T are disjoint.
class ClusterMonomialIndex {
 public:
  ClusterMonomialIndex() = default;
  // Throws PreconditionError when U and T overlap.
  ClusterMonomialIndex(VertexMultiset u, VertexMultiset t);

  const VertexMultiset& u() const { return u_; }
  const VertexMultiset& t() const { return t_; }

  friend auto operator<=>(const ClusterMonomialIndex&, const ClusterMonomialIndex&) = default;

 private:
  VertexMultiset u_;
  VertexMultiset t_;
};

// (U, ΣS) when S (ignoring empty sets) is a nested multicollection on
// V ∖ U<1>; std::nullopt otherwise.
std::optional<ClusterMonomialIndex> canonical_cluster_index(const Digraph& g, const MonomialIndex& m);

// A cluster: {X_v : v ∈ U} ∪ {Y_I : I ∈ N} with N maximal nested on V ∖ U.
struct Cluster {
  VertexSet u;
  std::vector<VertexSet> nested;
};

// All clusters, ordered by U in canonical set order, then by collection.
std::vector<Cluster> enumerate_clusters(const Digraph& g);

// "{{2},{4},{2,3,4},{1,2,3,4}}": members in canonical set order, repeated by
// multiplicity.
std::string format_collection(const Digraph& g, const std::vector<VertexSet>& members);
std::string format_collection(const Digraph& g, const SetMultiset& members);

}  // namespace glp
