#include "glp/digraph.hpp"

#include <algorithm>
#include <set>

namespace glp {

Digraph::Digraph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw PreconditionError("duplicate vertex label");
  if (labels_.size() > kMaxVertices)
    throw PreconditionError("graph has " + std::to_string(labels_.size()) + " vertices; at most " +
                            std::to_string(kMaxVertices) + " are supported");
  out_.assign(labels_.size(), VertexSet{});
  in_.assign(labels_.size(), VertexSet{});
  for (const auto& [u, v] : edges) {
    VertexId a = id(u), b = id(v);
    if (a == b) throw PreconditionError("self-loop at vertex '" + u + "'");
    if (out_[a.index].contains(b)) throw PreconditionError("duplicate edge " + u + " -> " + v);
    out_[a.index].insert(b);
    in_[b.index].insert(a);
  }
}

std::optional<VertexId> Digraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - labels_.begin())};
}

VertexId Digraph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UnknownVertex(std::string(label));
}

std::size_t Digraph::edge_count() const {
  std::size_t n = 0;
  for (VertexSet s : out_) n += s.size();
  return n;
}

std::vector<std::pair<VertexId, VertexId>> Digraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::uint32_t i = 0; i < out_.size(); ++i)
    for (VertexId w : out_[i]) out.emplace_back(VertexId{i}, w);
  return out;
}

void Digraph::require_subset(VertexSet s) const {
  VertexSet extra = s - vertices();
  if (!extra.empty()) throw UnknownVertex("#" + std::to_string(extra.min().index));
}

VertexSet reachable_within(const Digraph& g, VertexId from, VertexSet within) {
  if (!within.contains(from)) return {};
  VertexSet seen = VertexSet::singleton(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId v : frontier) next = next | (g.out_neighbors(v) & within);
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen;
}

namespace {

// Tarjan's algorithm restricted to an induced subgraph.
class TarjanScc {
 public:
  TarjanScc(const Digraph& g, VertexSet subset) : g_(g), subset_(subset), index_(g.size(), -1), low_(g.size(), 0) {}

  std::vector<VertexSet> run() {
    for (VertexId v : subset_)
      if (index_[v.index] < 0) visit(v);
    std::sort(components_.begin(), components_.end(),
              [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return components_;
  }

 private:
  void visit(VertexId v) {
    index_[v.index] = low_[v.index] = counter_++;
    stack_.push_back(v);
    on_stack_.insert(v);
    for (VertexId w : g_.out_neighbors(v) & subset_) {
      if (index_[w.index] < 0) {
        visit(w);
        low_[v.index] = std::min(low_[v.index], low_[w.index]);
      } else if (on_stack_.contains(w)) {
        low_[v.index] = std::min(low_[v.index], index_[w.index]);
      }
    }
    if (low_[v.index] == index_[v.index]) {
      VertexSet comp;
      VertexId w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_.erase(w);
        comp.insert(w);
      } while (w != v);
      components_.push_back(comp);
    }
  }

  const Digraph& g_;
  VertexSet subset_;
  std::vector<int> index_;
  std::vector<int> low_;
  std::vector<VertexId> stack_;
  VertexSet on_stack_;
  int counter_ = 0;
  std::vector<VertexSet> components_;
};

}  // namespace

std::vector<VertexSet> strongly_connected_components(const Digraph& g, VertexSet subset) {
  g.require_subset(subset);
  return TarjanScc(g, subset).run();
}

bool is_strongly_connected(const Digraph& g, VertexSet subset) {
  g.require_subset(subset);
  if (subset.size() <= 1) return true;
  return reachable_within(g, subset.min(), subset) == subset &&
         std::all_of(subset.begin(), subset.end(),
                     [&](VertexId v) { return reachable_within(g, v, subset).contains(subset.min()); });
}

std::vector<VertexSet> strongly_connected_subsets(const Digraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  for_each_subset(within, [&](VertexSet s) {
    if (!s.empty() && is_strongly_connected(g, s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_tree(const Digraph& g) {
  std::size_t n = g.size();
  if (n == 0) return false;
  if (g.edge_count() != 2 * (n - 1)) return false;
  for (auto [a, b] : g.edges())
    if (!g.has_edge(b, a)) return false;
  return reachable_within(g, VertexId{0}, g.vertices()) == g.vertices();
}

std::string format_set(const Digraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

std::string format_multiset(const Digraph& g, const VertexMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : m.elements()) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

VertexSet layer_set(const VertexMultiset& m, int i) {
  VertexSet s;
  for (const auto& [v, c] : m)
    if (c >= i) s.insert(v);
  return s;
}

VertexMultiset to_multiset(VertexSet s) {
  VertexMultiset m;
  for (VertexId v : s) m.add(v);
  return m;
}

VertexSet support(const VertexMultiset& m) { return layer_set(m, 1); }

}  // namespace glp
