#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "glp/laurent.hpp"
#include "glp/lp.hpp"
#include "glp/nested.hpp"

namespace glp {

// Linear combination Σ c_(U,T) π(U,T) of cluster monomials with coefficients
// in Z[A_v].  No zero coefficients are stored; terms iterate in index order.
class ClusterCombination {
 public:
  explicit ClusterCombination(std::size_t universe = 0) : n_(universe) {}
  static ClusterCombination single(std::size_t universe, ClusterMonomialIndex idx);

  std::size_t universe() const { return n_; }
  const std::map<ClusterMonomialIndex, CoefPoly>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CoefPoly coefficient(const ClusterMonomialIndex& idx) const;

  void add(const ClusterMonomialIndex& idx, const CoefPoly& c);
  ClusterCombination& operator+=(const ClusterCombination& other);
  ClusterCombination scaled(const CoefPoly& c) const;
  // Multiplies every term by ∏_{v∈U} X_v.  Throws PreconditionError when
  // some T meets U.
  ClusterCombination times_x(const VertexMultiset& u) const;

  bool has_integer_coefficients() const;
  bool is_coefficientwise_nonnegative() const;
  // Union of the supports of every U and T.
  VertexSet vertex_support() const;

  friend bool operator==(const ClusterCombination&, const ClusterCombination&) = default;

 private:
  std::size_t n_;
  std::map<ClusterMonomialIndex, CoefPoly> terms_;
};

// Vertex-non-repeating directed path.
struct IPath {
  std::vector<VertexId> vertices;

  VertexSet vertex_set() const;
  friend auto operator<=>(const IPath&, const IPath&) = default;
};

struct ExchangePath {
  IPath path;        // starts at v, ends at `endpoint`
  VertexId endpoint;
};

// Paths v = p_1 -> ... -> p_k = w with k >= 2, all vertices distinct and
// p_2..p_{k-1} in I; w may lie inside or outside I.  DFS order over
// out-neighbours by vertex index.  Throws PreconditionError when v ∉ I.
std::vector<ExchangePath> enumerate_exchange_paths(const Digraph& g, VertexId v, VertexSet subset);

// One summand of X_v·Y_I.  Writing f for an acyclic function on I and
// following v, f(v), f²(v), ... yields a path p: it either stops at a loop at
// some u ∈ I (an inside term, weight A_u) or steps out of I to some w (an
// outside term, weight X_w).  Removing p leaves an acyclic function on I ∖ p,
// so
//
//   X_v Y_I = Σ_{u∈I} Σ_{p: v→u} A_u Y_{I∖p} + Σ_{w∉I} Σ_{p: v→w} X_w Y_{I∖p},
//
// where the inside sum includes the one-vertex path (v) itself.
struct ExchangeTerm {
  enum class Kind { inside, outside };
  Kind kind;
  VertexId w;
  VertexSet residual;  // I ∖ p
  IPath path;
};

// Terms of the exchange relation for v ∈ I, inside terms for the trivial path
// first, then one term per path of enumerate_exchange_paths.  Throws
// PreconditionError when v ∉ I.
std::vector<ExchangeTerm> exchange_XY(const Digraph& g, VertexId v, VertexSet subset);

// Right-hand side of the exchange relation as a Laurent polynomial.
LaurentPoly exchange_sum(const Digraph& g, const std::vector<ExchangeTerm>& terms, const YCache& ys);

// Rewrites Y-monomials and general monomials into cluster monomials.  Holds
// memo tables; one instance per graph, single-threaded.
class Expander {
 public:
  explicit Expander(const Digraph& g) : g_(g) {}

  const Digraph& graph() const { return g_; }

  // ∏_{I∈S} Y_I as an integer combination of cluster Y-monomials (U = ∅).
  // Base case: S already equals its layer multiset {T<1>, T<2>, ...} for
  // T = ΣS.  Otherwise both sides of
  //   ∏_{S∈S} Σ_{C} Y_{S∖C} = ∏_{T'∈layers} Σ_{C} Y_{T'∖C}
  // (C over vertex-disjoint cycle families) are expanded and every term other
  // than the all-empty S-side one is rewritten recursively.
  ClusterCombination y_span_expand(const SetMultiset& s);

  // X_U ∏_{I∈S} Y_I as a combination over Z[A_v].  While some v ∈ U lies in
  // a member, the minimal such v and the minimal member containing it are
  // rewritten with the exchange relation; then y_span_expand finishes.
  ClusterCombination span_expand(const MonomialIndex& m);

 private:
  const std::map<VertexMultiset, std::int64_t>& y_expand(const SetMultiset& s);
  const std::vector<std::pair<VertexSet, std::int64_t>>& covers(VertexSet s);
  const ClusterCombination& span(const MonomialIndex& m);

  const Digraph& g_;
  std::map<SetMultiset, std::map<VertexMultiset, std::int64_t>> y_memo_;
  std::map<MonomialIndex, ClusterCombination> span_memo_;
  std::map<VertexSet, std::vector<std::pair<VertexSet, std::int64_t>>> covers_;
};

ClusterCombination y_span_expand(const Digraph& g, const SetMultiset& s);
ClusterCombination span_expand(const Digraph& g, const MonomialIndex& m);

// Paths v_1, ..., v_k (k >= 2) of a tree with v_1 ∈ I∖J, v_k ∈ J∖I and the
// rest in I∩J.
std::vector<IPath> enumerate_tree_paths(const Digraph& g, VertexSet i, VertexSet j);
// Every family of pairwise vertex-disjoint such paths, the empty one first.
std::vector<std::vector<IPath>> enumerate_tree_path_families(const Digraph& g, VertexSet i, VertexSet j);

// Y_I Y_J = Σ_P Y_{(I∪J)∖P} Y_{(I∩J)∖P} over disjoint path families P on a
// tree.  Throws NotATree.
ClusterCombination tree_ptolemy_expand(const Digraph& g, VertexSet i, VertexSet j);

// Evaluates monomials and combinations as Laurent polynomials through the
// definition of Y_I.  Used as the independent oracle for every expansion.
class LaurentOracle {
 public:
  explicit LaurentOracle(const YCache& ys) : ys_(ys) {}

  const Digraph& graph() const { return ys_.graph(); }
  LaurentPoly monomial(const MonomialIndex& m) const;
  LaurentPoly cluster_monomial(const ClusterMonomialIndex& idx) const;
  LaurentPoly combination(const ClusterCombination& c) const;

 private:
  const LaurentPoly& y_product(const SetMultiset& s) const;

  const YCache& ys_;
  mutable std::shared_mutex mu_;
  mutable std::map<SetMultiset, LaurentPoly> products_;
};

// Human rendering of one term: "A_2·X_1 Y{2}Y{1,3}" style, "1" for the unit.
std::string format_cluster_monomial(const Digraph& g, const ClusterMonomialIndex& idx);
// One line per term: "<coef>  U=<U> T=<T>  <monomial>".
std::string format_combination(const Digraph& g, const ClusterCombination& c);

}  // namespace glp
