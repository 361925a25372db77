#include "glp/lp.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>

namespace glp {

// ------------------------------------------------------------ Multifunction

Multifunction::Multifunction(const Digraph& g, VertexMultiset domain, Multiset<Edge> edges)
    : n_(g.size()), domain_(std::move(domain)), edges_(std::move(edges)) {
  g.require_subset(support(domain_));
  VertexMultiset outdeg;
  for (const auto& [e, c] : edges_) {
    if (e.from.index >= n_ || e.to.index >= n_) throw PreconditionError("multifunction edge outside the graph");
    if (!e.is_loop() && !g.has_edge(e.from, e.to))
      throw PreconditionError("multifunction edge " + g.label(e.from) + " -> " + g.label(e.to) + " is not in E");
    outdeg.add(e.from, c);
  }
  if (outdeg != domain_) throw PreconditionError("multifunction out-degrees do not match its domain");
}

Multifunction Multifunction::from_function(const Digraph& g, VertexSet domain, std::span<const VertexId> image) {
  if (image.size() != domain.size()) throw PreconditionError("function image has the wrong length");
  Multiset<Edge> edges;
  std::size_t k = 0;
  for (VertexId v : domain) edges.add(Edge{v, image[k++]});
  return Multifunction(g, to_multiset(domain), std::move(edges));
}

bool Multifunction::is_acyclic() const {
  // Kahn's algorithm on the distinct non-loop edges.
  std::vector<int> indeg(n_, 0);
  std::vector<std::vector<VertexId>> succ(n_);
  for (const auto& [e, c] : edges_) {
    if (e.is_loop()) continue;
    succ[e.from.index].push_back(e.to);
    ++indeg[e.to.index];
  }
  std::vector<VertexId> ready;
  for (std::uint32_t v = 0; v < n_; ++v)
    if (indeg[v] == 0) ready.push_back(VertexId{v});
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : succ[v.index])
      if (--indeg[w.index] == 0) ready.push_back(w);
  }
  return removed == n_;
}

Multifunction operator+(const Multifunction& f, const Multifunction& g) {
  if (f.n_ != g.n_ && !f.domain_.empty() && !g.domain_.empty())
    throw UniverseMismatch("multifunctions of different graphs");
  Multifunction r;
  r.n_ = std::max(f.n_, g.n_);
  r.domain_ = f.domain_ + g.domain_;
  r.edges_ = f.edges_ + g.edges_;
  return r;
}

Multifunction multifunction_sum(const Multifunction& f, const Multifunction& g) { return f + g; }

LaurentPoly weight(const Multifunction& f) {
  Monomial m;
  for (const auto& [e, c] : f.edges()) {
    auto& slot = e.is_loop() ? m.a[e.from.index] : m.x[e.to.index];
    slot = static_cast<std::int16_t>(slot + c);
  }
  return LaurentPoly::monomial(f.universe(), m);
}

LaurentPoly normalized_weight(const Multifunction& f) { return weight(f).divided_by_x(f.domain()); }

// ---------------------------------------------------------- set functions

bool is_acyclic_function(VertexSet domain, std::span<const VertexId> image) {
  std::vector<VertexId> order = domain.to_vector();
  auto image_of = [&](VertexId v) -> const VertexId* {
    auto it = std::lower_bound(order.begin(), order.end(), v);
    return (it != order.end() && *it == v) ? &image[static_cast<std::size_t>(it - order.begin())] : nullptr;
  };
  for (VertexId start : order) {
    // Walk until leaving the domain or revisiting a vertex.
    std::vector<VertexId> walk{start};
    VertexSet seen = VertexSet::singleton(start);
    while (true) {
      const VertexId* next = image_of(walk.back());
      if (!next) break;
      if (seen.contains(*next)) {
        auto pos = std::find(walk.begin(), walk.end(), *next);
        if (walk.end() - pos >= 2) return false;
        break;
      }
      walk.push_back(*next);
      seen.insert(*next);
    }
  }
  return true;
}

namespace {

// Backtracking over choice vectors; `acyclic_only` prunes any assignment that
// closes a cycle of length >= 2.
class FunctionEnumerator {
 public:
  FunctionEnumerator(const Digraph& g, VertexSet domain, bool acyclic_only,
                     const std::function<void(const FunctionImage&)>& fn)
      : g_(g), domain_(domain), order_(domain.to_vector()), assigned_(g.size()), acyclic_only_(acyclic_only), fn_(fn) {
    image_.resize(order_.size());
  }

  void run() { step(0); }

 private:
  bool closes_cycle(VertexId v, VertexId w) const {
    while (w != v) {
      if (!domain_.contains(w) || !has_image_.contains(w)) return false;
      VertexId next = assigned_[w.index];
      if (next == w) return false;
      w = next;
    }
    return true;
  }

  void choose(std::size_t k, VertexId v, VertexId w) {
    if (acyclic_only_ && w != v && closes_cycle(v, w)) return;
    image_[k] = w;
    assigned_[v.index] = w;
    has_image_.insert(v);
    step(k + 1);
    has_image_.erase(v);
  }

  void step(std::size_t k) {
    if (k == order_.size()) {
      fn_(image_);
      return;
    }
    VertexId v = order_[k];
    choose(k, v, v);
    for (VertexId w : g_.out_neighbors(v)) choose(k, v, w);
  }

  const Digraph& g_;
  VertexSet domain_;
  std::vector<VertexId> order_;
  std::vector<VertexId> assigned_;
  VertexSet has_image_;
  FunctionImage image_;
  bool acyclic_only_;
  const std::function<void(const FunctionImage&)>& fn_;
};

}  // namespace

void for_each_acyclic_function(const Digraph& g, VertexSet domain, const std::function<void(const FunctionImage&)>& fn) {
  g.require_subset(domain);
  FunctionEnumerator(g, domain, true, fn).run();
}

void for_each_function(const Digraph& g, VertexSet domain, const std::function<void(const FunctionImage&)>& fn) {
  g.require_subset(domain);
  FunctionEnumerator(g, domain, false, fn).run();
}

std::vector<Multifunction> enumerate_acyclic_functions(const Digraph& g, VertexSet domain) {
  std::vector<Multifunction> out;
  for_each_acyclic_function(g, domain, [&](const FunctionImage& img) {
    out.push_back(Multifunction::from_function(g, domain, img));
  });
  return out;
}

LaurentPoly compute_Y(const Digraph& g, VertexSet subset) {
  std::vector<LaurentPoly::Term> terms;
  std::vector<VertexId> order = subset.to_vector();
  for_each_acyclic_function(g, subset, [&](const FunctionImage& img) {
    Monomial m;
    for (std::size_t k = 0; k < order.size(); ++k) {
      VertexId v = order[k], w = img[k];
      if (w == v)
        ++m.a[v.index];
      else
        ++m.x[w.index];
      --m.x[v.index];
    }
    terms.emplace_back(m, 1);
  });
  return LaurentPoly::from_terms(g.size(), std::move(terms));
}

const LaurentPoly& YCache::y(VertexSet subset) const {
  {
    std::shared_lock lock(mu_);
    auto it = table_.find(subset);
    if (it != table_.end()) return it->second;
  }
  LaurentPoly value = compute_Y(g_, subset);
  std::unique_lock lock(mu_);
  return table_.try_emplace(subset, std::move(value)).first->second;
}

std::size_t YCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::vector<std::pair<VertexSet, LaurentPoly>> y_scc_factorization(const Digraph& g, VertexSet subset) {
  std::vector<std::pair<VertexSet, LaurentPoly>> out;
  for (VertexSet c : strongly_connected_components(g, subset)) out.emplace_back(c, compute_Y(g, c));
  return out;
}

// ------------------------------------------------------------------ cycles

VertexSet Cycle::vertex_set() const {
  VertexSet s;
  for (VertexId v : vertices) s.insert(v);
  return s;
}

VertexSet CycleFamily::vertex_set() const {
  VertexSet s;
  for (const Cycle& c : cycles) s = s | c.vertex_set();
  return s;
}

std::vector<Cycle> enumerate_cycles(const Digraph& g, VertexSet subset) {
  g.require_subset(subset);
  std::vector<Cycle> out;
  for (VertexId start : subset) {
    // Only vertices above `start`, so each cycle is found once, from its minimum.
    VertexSet allowed = subset - VertexSet(VertexSet::singleton(start).bits() * 2 - 1);
    std::vector<VertexId> path{start};
    VertexSet on_path = VertexSet::singleton(start);
    std::function<void(VertexId)> dfs = [&](VertexId u) {
      for (VertexId w : g.out_neighbors(u)) {
        if (w == start && path.size() >= 2) out.push_back(Cycle{path});
        if (!allowed.contains(w) || on_path.contains(w)) continue;
        path.push_back(w);
        on_path.insert(w);
        dfs(w);
        on_path.erase(w);
        path.pop_back();
      }
    };
    dfs(start);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycleFamily> enumerate_cycle_families(const Digraph& g, VertexSet subset) {
  std::vector<Cycle> cycles = enumerate_cycles(g, subset);
  std::vector<VertexSet> sets;
  for (const Cycle& c : cycles) sets.push_back(c.vertex_set());
  std::vector<CycleFamily> out;
  CycleFamily current;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t from, VertexSet used) {
    out.push_back(current);
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (used.intersects(sets[i])) continue;
      current.cycles.push_back(cycles[i]);
      rec(i + 1, used | sets[i]);
      current.cycles.pop_back();
    }
  };
  rec(0, VertexSet{});
  return out;
}

std::vector<std::pair<VertexSet, std::int64_t>> cycle_family_covers(const Digraph& g, VertexSet subset) {
  std::vector<std::pair<VertexSet, std::int64_t>> out;
  for (const CycleFamily& f : enumerate_cycle_families(g, subset)) {
    VertexSet s = f.vertex_set();
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == s; });
    if (it == out.end())
      out.emplace_back(s, 1);
    else
      ++it->second;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<CycleFamily, FunctionImage> decompose_function(VertexSet domain, std::span<const VertexId> image) {
  std::vector<VertexId> order = domain.to_vector();
  auto image_of = [&](VertexId v) -> std::optional<VertexId> {
    auto it = std::lower_bound(order.begin(), order.end(), v);
    if (it == order.end() || *it != v) return std::nullopt;
    return image[static_cast<std::size_t>(it - order.begin())];
  };
  CycleFamily family;
  VertexSet on_cycles;
  for (VertexId start : order) {
    if (on_cycles.contains(start)) continue;
    std::vector<VertexId> walk{start};
    VertexSet seen = VertexSet::singleton(start);
    while (auto next = image_of(walk.back())) {
      if (seen.contains(*next)) {
        auto pos = std::find(walk.begin(), walk.end(), *next);
        if (walk.end() - pos >= 2 && !on_cycles.contains(*next)) {
          std::vector<VertexId> cyc(pos, walk.end());
          std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
          family.cycles.push_back(Cycle{cyc});
          for (VertexId v : cyc) on_cycles.insert(v);
        }
        break;
      }
      walk.push_back(*next);
      seen.insert(*next);
    }
  }
  std::sort(family.cycles.begin(), family.cycles.end());
  FunctionImage rest;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (!on_cycles.contains(order[k])) rest.push_back(image[k]);
  return {family, rest};
}

}  // namespace glp
