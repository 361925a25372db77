#include "glp/nested.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace glp {

namespace {

std::vector<VertexSet> distinct_nonempty(const SetMultiset& members) {
  std::vector<VertexSet> out;
  for (const auto& [s, c] : members)
    if (!s.empty()) out.push_back(s);
  return out;
}

bool pairwise_nested_or_disjoint(const std::vector<VertexSet>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      VertexSet a = m[i], b = m[j];
      if (a.intersects(b) && !a.contains(b) && !b.contains(a)) return false;
    }
  return true;
}

// True when the pairwise-disjoint sets in `family` are exactly the SCCs of
// their union.
bool family_is_scc_partition(const Digraph& g, std::vector<VertexSet> family) {
  VertexSet uni;
  for (VertexSet s : family) uni = uni | s;
  std::vector<VertexSet> comps = strongly_connected_components(g, uni);
  std::sort(family.begin(), family.end());
  std::sort(comps.begin(), comps.end());
  return comps == family;
}

bool n2_siblings(const Digraph& g, const std::vector<VertexSet>& m) {
  for (VertexSet s : m)
    if (!is_strongly_connected(g, s)) return false;
  // Parents: every member, plus the root (nullopt) above everything.
  auto children_of = [&](std::optional<VertexSet> parent) {
    std::vector<VertexSet> inside;
    for (VertexSet s : m)
      if (!parent || (parent->contains(s) && s != *parent)) inside.push_back(s);
    std::vector<VertexSet> maximal;
    for (VertexSet s : inside) {
      bool covered = std::any_of(inside.begin(), inside.end(), [&](VertexSet t) { return t != s && t.contains(s); });
      if (!covered) maximal.push_back(s);
    }
    return maximal;
  };
  if (!family_is_scc_partition(g, children_of(std::nullopt))) return false;
  for (VertexSet s : m)
    if (!family_is_scc_partition(g, children_of(s))) return false;
  return true;
}

bool n2_full(const Digraph& g, const std::vector<VertexSet>& m) {
  std::vector<VertexSet> chosen;
  std::function<bool(std::size_t, VertexSet)> rec = [&](std::size_t from, VertexSet used) {
    if (!chosen.empty() && !family_is_scc_partition(g, chosen)) return false;
    for (std::size_t i = from; i < m.size(); ++i) {
      if (used.intersects(m[i])) continue;
      chosen.push_back(m[i]);
      bool ok = rec(i + 1, used | m[i]);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, VertexSet{});
}

// True when no strongly connected S ⊆ W outside `n` keeps `n ∪ {S}` nested.
// Any nested superset of n contains such a one-step extension, so this is
// maximality under inclusion.
bool is_maximal(const Digraph& g, const std::vector<VertexSet>& n, const std::vector<VertexSet>& candidates) {
  for (VertexSet s : candidates) {
    if (std::find(n.begin(), n.end(), s) != n.end()) continue;
    std::vector<VertexSet> grown = n;
    grown.push_back(s);
    if (is_nested(g, grown)) return false;
  }
  return true;
}

}  // namespace

bool is_nested(const Digraph& g, const std::vector<VertexSet>& members, N2Check mode) {
  std::vector<VertexSet> m;
  for (VertexSet s : members) {
    g.require_subset(s);
    if (!s.empty() && std::find(m.begin(), m.end(), s) == m.end()) m.push_back(s);
  }
  if (!pairwise_nested_or_disjoint(m)) return false;
  return mode == N2Check::siblings ? n2_siblings(g, m) : n2_full(g, m);
}

bool is_nested(const Digraph& g, const SetMultiset& members, N2Check mode) {
  return is_nested(g, distinct_nonempty(members), mode);
}

SetMultiset multiset_to_nested(const Digraph& g, const VertexMultiset& t) {
  g.require_subset(support(t));
  SetMultiset out;
  for (int i = 1; i <= t.max_multiplicity(); ++i)
    for (VertexSet c : strongly_connected_components(g, layer_set(t, i))) out.add(c);
  return out;
}

VertexMultiset nested_to_multiset(const SetMultiset& n) {
  VertexMultiset out;
  for (const auto& [s, c] : n)
    for (VertexId v : s) out.add(v, c);
  return out;
}

std::vector<std::vector<VertexSet>> enumerate_maximal_nested_collections(const Digraph& g, VertexSet w) {
  g.require_subset(w);
  std::vector<VertexId> verts = w.to_vector();
  const int cap = static_cast<int>(verts.size());
  std::set<std::vector<VertexSet>> collections;
  std::vector<int> mult(verts.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == verts.size()) {
      VertexMultiset t;
      for (std::size_t i = 0; i < verts.size(); ++i) t.add(verts[i], mult[i]);
      SetMultiset n = multiset_to_nested(g, t);
      if (n.max_multiplicity() > 1) return;
      collections.insert(distinct_nonempty(n));
      return;
    }
    for (mult[k] = 0; mult[k] <= cap; ++mult[k]) rec(k + 1);
  };
  rec(0);
  std::vector<VertexSet> candidates = strongly_connected_subsets(g, w);
  std::vector<std::vector<VertexSet>> out;
  for (const auto& n : collections)
    if (is_maximal(g, n, candidates)) out.push_back(n);
  return out;
}

std::vector<std::vector<VertexSet>> enumerate_maximal_nested_collections_direct(const Digraph& g, VertexSet w) {
  g.require_subset(w);
  std::vector<VertexSet> candidates = strongly_connected_subsets(g, w);
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == candidates.size()) {
      if (is_maximal(g, current, candidates)) out.push_back(current);
      return;
    }
    current.push_back(candidates[k]);
    if (is_nested(g, current, N2Check::full)) rec(k + 1);
    current.pop_back();
    rec(k + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

ClusterMonomialIndex::ClusterMonomialIndex(VertexMultiset u, VertexMultiset t) : u_(std::move(u)), t_(std::move(t)) {
  if (!u_.is_disjoint_from(t_)) throw PreconditionError("cluster monomial index needs disjoint U and T");
}

std::optional<ClusterMonomialIndex> canonical_cluster_index(const Digraph& g, const MonomialIndex& m) {
  VertexSet u = support(m.u);
  g.require_subset(u);
  SetMultiset s;
  for (const auto& [set, c] : m.s) {
    g.require_subset(set);
    if (set.empty()) continue;
    if (set.intersects(u)) return std::nullopt;
    s.add(set, c);
  }
  if (!is_nested(g, s)) return std::nullopt;
  return ClusterMonomialIndex(m.u, nested_to_multiset(s));
}

std::vector<Cluster> enumerate_clusters(const Digraph& g) {
  std::vector<VertexSet> us;
  for_each_subset(g.vertices(), [&](VertexSet u) { us.push_back(u); });
  std::sort(us.begin(), us.end());
  std::vector<Cluster> out;
  for (VertexSet u : us)
    for (auto& n : enumerate_maximal_nested_collections(g, g.vertices() - u)) out.push_back(Cluster{u, std::move(n)});
  return out;
}

std::string format_collection(const Digraph& g, const std::vector<VertexSet>& members) {
  std::vector<VertexSet> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += format_set(g, sorted[i]);
  }
  return out + "}";
}

std::string format_collection(const Digraph& g, const SetMultiset& members) {
  std::vector<VertexSet> flat;
  for (const auto& [s, c] : members) flat.insert(flat.end(), static_cast<std::size_t>(c), s);
  return format_collection(g, flat);
}

}  // namespace glp
