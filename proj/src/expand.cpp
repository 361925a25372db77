#include "glp/expand.hpp"

#include <algorithm>
#include <functional>

namespace glp {

namespace {

std::int64_t vertex_count(const SetMultiset& s) {
  std::int64_t n = 0;
  for (const auto& [set, c] : s) n += static_cast<std::int64_t>(set.size()) * c;
  return n;
}

SetMultiset drop_empty(const SetMultiset& s) {
  SetMultiset out;
  for (const auto& [set, c] : s)
    if (!set.empty()) out.add(set, c);
  return out;
}

SetMultiset layers_of(const VertexMultiset& t) {
  SetMultiset out;
  for (int i = 1; i <= t.max_multiplicity(); ++i) out.add(layer_set(t, i));
  return out;
}

void require_decrease(const SetMultiset& from, const SetMultiset& to) {
  if (vertex_count(to) >= vertex_count(from))
    throw NonTermination("rewriting step did not decrease the vertex count");
}

}  // namespace

// ------------------------------------------------------ ClusterCombination

ClusterCombination ClusterCombination::single(std::size_t universe, ClusterMonomialIndex idx) {
  ClusterCombination c(universe);
  c.add(idx, CoefPoly::constant(universe, 1));
  return c;
}

CoefPoly ClusterCombination::coefficient(const ClusterMonomialIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? CoefPoly(n_) : it->second;
}

void ClusterCombination::add(const ClusterMonomialIndex& idx, const CoefPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ClusterCombination& ClusterCombination::operator+=(const ClusterCombination& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

ClusterCombination ClusterCombination::scaled(const CoefPoly& c) const {
  ClusterCombination out(n_);
  for (const auto& [idx, k] : terms_) out.add(idx, k * c);
  return out;
}

ClusterCombination ClusterCombination::times_x(const VertexMultiset& u) const {
  ClusterCombination out(n_);
  for (const auto& [idx, k] : terms_) out.add(ClusterMonomialIndex(idx.u() + u, idx.t()), k);
  return out;
}

bool ClusterCombination::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

bool ClusterCombination::is_coefficientwise_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_coefficientwise_nonnegative(); });
}

VertexSet ClusterCombination::vertex_support() const {
  VertexSet s;
  for (const auto& [idx, k] : terms_) s = s | support(idx.u()) | support(idx.t());
  return s;
}

// -------------------------------------------------------- exchange relation

VertexSet IPath::vertex_set() const {
  VertexSet s;
  for (VertexId v : vertices) s.insert(v);
  return s;
}

std::vector<ExchangePath> enumerate_exchange_paths(const Digraph& g, VertexId v, VertexSet subset) {
  g.require_subset(subset);
  if (!subset.contains(v)) throw PreconditionError("exchange path start must lie in I");
  std::vector<ExchangePath> out;
  std::vector<VertexId> path{v};
  VertexSet on_path = VertexSet::singleton(v);
  std::function<void()> dfs = [&] {
    for (VertexId w : g.out_neighbors(path.back())) {
      if (on_path.contains(w)) continue;
      path.push_back(w);
      out.push_back(ExchangePath{IPath{path}, w});
      if (subset.contains(w)) {
        on_path.insert(w);
        dfs();
        on_path.erase(w);
      }
      path.pop_back();
    }
  };
  dfs();
  return out;
}

std::vector<ExchangeTerm> exchange_XY(const Digraph& g, VertexId v, VertexSet subset) {
  std::vector<ExchangePath> paths = enumerate_exchange_paths(g, v, subset);
  std::vector<ExchangeTerm> out;
  out.push_back(ExchangeTerm{ExchangeTerm::Kind::inside, v, subset - VertexSet::singleton(v), IPath{{v}}});
  for (auto& p : paths) {
    VertexSet residual = subset - p.path.vertex_set();
    auto kind = subset.contains(p.endpoint) ? ExchangeTerm::Kind::inside : ExchangeTerm::Kind::outside;
    out.push_back(ExchangeTerm{kind, p.endpoint, residual, std::move(p.path)});
  }
  return out;
}

LaurentPoly exchange_sum(const Digraph& g, const std::vector<ExchangeTerm>& terms, const YCache& ys) {
  LaurentPoly sum(g.size());
  for (const auto& t : terms) {
    LaurentPoly factor = t.kind == ExchangeTerm::Kind::inside ? LaurentPoly::a(g.size(), t.w) : LaurentPoly::x(g.size(), t.w);
    sum += factor * ys.y(t.residual);
  }
  return sum;
}

// ----------------------------------------------------------------- Expander

const std::vector<std::pair<VertexSet, std::int64_t>>& Expander::covers(VertexSet s) {
  auto it = covers_.find(s);
  if (it == covers_.end()) it = covers_.emplace(s, cycle_family_covers(g_, s)).first;
  return it->second;
}

const std::map<VertexMultiset, std::int64_t>& Expander::y_expand(const SetMultiset& s) {
  if (auto it = y_memo_.find(s); it != y_memo_.end()) return it->second;

  const VertexMultiset t = nested_to_multiset(s);
  const SetMultiset layered = layers_of(t);
  std::map<VertexMultiset, std::int64_t> result;
  auto accumulate = [&](const std::map<VertexMultiset, std::int64_t>& part, std::int64_t factor) {
    for (const auto& [key, c] : part) {
      std::int64_t& slot = result[key];
      slot = checked_add(slot, checked_mul(c, factor));
      if (slot == 0) result.erase(key);
    }
  };

  if (layered == s) {
    result.emplace(t, 1);
  } else {
    // Σ over tuples of cycle covers (one per listed set), skipping the
    // all-empty tuple; the caller handles that one.
    auto for_each_tuple = [&](const std::vector<VertexSet>& sets, std::int64_t sign) {
      std::vector<const std::vector<std::pair<VertexSet, std::int64_t>>*> options;
      for (VertexSet set : sets) options.push_back(&covers(set));
      std::vector<std::size_t> pick(sets.size(), 0);
      std::function<void(std::size_t, std::int64_t, bool)> rec = [&](std::size_t k, std::int64_t mult, bool any) {
        if (k == sets.size()) {
          if (!any) return;
          SetMultiset r;
          for (std::size_t i = 0; i < sets.size(); ++i) {
            VertexSet rest = sets[i] - (*options[i])[pick[i]].first;
            if (!rest.empty()) r.add(rest);
          }
          require_decrease(s, r);
          accumulate(y_expand(r), checked_mul(mult, sign));
          return;
        }
        for (pick[k] = 0; pick[k] < options[k]->size(); ++pick[k]) {
          const auto& [covered, count] = (*options[k])[pick[k]];
          rec(k + 1, checked_mul(mult, count), any || !covered.empty());
        }
      };
      rec(0, 1, false);
    };
    result.emplace(t, 1);
    for_each_tuple(layered.elements(), 1);
    for_each_tuple(s.elements(), -1);
  }
  return y_memo_.emplace(s, std::move(result)).first->second;
}

ClusterCombination Expander::y_span_expand(const SetMultiset& s) {
  for (const auto& [set, c] : s) g_.require_subset(set);
  ClusterCombination out(g_.size());
  for (const auto& [t, c] : y_expand(drop_empty(s)))
    out.add(ClusterMonomialIndex({}, t), CoefPoly::constant(g_.size(), c));
  return out;
}

const ClusterCombination& Expander::span(const MonomialIndex& m) {
  if (auto it = span_memo_.find(m); it != span_memo_.end()) return it->second;
  const std::size_t n = g_.size();
  ClusterCombination result(n);

  std::optional<std::pair<VertexId, VertexSet>> pivot;
  for (const auto& [v, c] : m.u) {
    for (const auto& [set, k] : m.s)
      if (set.contains(v)) {
        pivot.emplace(v, set);  // members iterate in canonical order
        break;
      }
    if (pivot) break;
  }

  if (pivot) {
    auto [v, member] = *pivot;
    VertexMultiset u_rest = m.u;
    u_rest.remove(v);
    SetMultiset s_rest = m.s;
    s_rest.remove(member);
    for (const ExchangeTerm& term : exchange_XY(g_, v, member)) {
      MonomialIndex next{u_rest, s_rest};
      if (!term.residual.empty()) next.s.add(term.residual);
      require_decrease(m.s, next.s);
      if (term.kind == ExchangeTerm::Kind::inside) {
        result += span(next).scaled(CoefPoly::a(n, term.w));
      } else {
        next.u.add(term.w);
        result += span(next);
      }
    }
  } else {
    result = y_span_expand(m.s).times_x(m.u);
  }
  return span_memo_.emplace(m, std::move(result)).first->second;
}

ClusterCombination Expander::span_expand(const MonomialIndex& m) {
  g_.require_subset(support(m.u));
  for (const auto& [set, c] : m.s) g_.require_subset(set);
  return span(MonomialIndex{m.u, drop_empty(m.s)});
}

ClusterCombination y_span_expand(const Digraph& g, const SetMultiset& s) { return Expander(g).y_span_expand(s); }
ClusterCombination span_expand(const Digraph& g, const MonomialIndex& m) { return Expander(g).span_expand(m); }

// ------------------------------------------------------------- tree Ptolemy

std::vector<IPath> enumerate_tree_paths(const Digraph& g, VertexSet i, VertexSet j) {
  g.require_subset(i | j);
  const VertexSet starts = i - j, ends = j - i, middle = i & j;
  std::vector<IPath> out;
  std::vector<VertexId> path;
  VertexSet on_path;
  std::function<void()> dfs = [&] {
    for (VertexId w : g.out_neighbors(path.back())) {
      if (on_path.contains(w)) continue;
      if (ends.contains(w)) {
        path.push_back(w);
        out.push_back(IPath{path});
        path.pop_back();
      } else if (middle.contains(w)) {
        path.push_back(w);
        on_path.insert(w);
        dfs();
        on_path.erase(w);
        path.pop_back();
      }
    }
  };
  for (VertexId s : starts) {
    path = {s};
    on_path = VertexSet::singleton(s);
    dfs();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<IPath>> enumerate_tree_path_families(const Digraph& g, VertexSet i, VertexSet j) {
  std::vector<IPath> paths = enumerate_tree_paths(g, i, j);
  std::vector<std::vector<IPath>> out;
  std::vector<IPath> current;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t from, VertexSet used) {
    out.push_back(current);
    for (std::size_t k = from; k < paths.size(); ++k) {
      VertexSet vs = paths[k].vertex_set();
      if (used.intersects(vs)) continue;
      current.push_back(paths[k]);
      rec(k + 1, used | vs);
      current.pop_back();
    }
  };
  rec(0, VertexSet{});
  return out;
}

ClusterCombination tree_ptolemy_expand(const Digraph& g, VertexSet i, VertexSet j) {
  if (!is_tree(g)) throw NotATree("tree_ptolemy_expand needs a tree with both edge directions");
  const std::size_t n = g.size();
  ClusterCombination out(n);
  for (const auto& family : enumerate_tree_path_families(g, i, j)) {
    VertexSet covered;
    for (const IPath& p : family) covered = covered | p.vertex_set();
    // Factor both Y's into their strongly connected components.
    SetMultiset factors;
    for (VertexSet part : {(i | j) - covered, (i & j) - covered})
      for (VertexSet c : strongly_connected_components(g, part)) factors.add(c);
    auto idx = canonical_cluster_index(g, MonomialIndex{{}, factors});
    if (!idx) throw AssertionFailure("tree expansion produced a non-cluster monomial " + format_collection(g, factors));
    out.add(*idx, CoefPoly::constant(n, 1));
  }
  return out;
}

// ------------------------------------------------------------------ oracle

const LaurentPoly& LaurentOracle::y_product(const SetMultiset& s) const {
  {
    std::shared_lock lock(mu_);
    if (auto it = products_.find(s); it != products_.end()) return it->second;
  }
  const std::size_t n = ys_.graph().size();
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (const auto& [set, c] : s)
    for (int k = 0; k < c; ++k) p *= ys_.y(set);
  std::unique_lock lock(mu_);
  return products_.try_emplace(s, std::move(p)).first->second;
}

LaurentPoly LaurentOracle::monomial(const MonomialIndex& m) const {
  Monomial x;
  for (const auto& [v, c] : m.u) x.x[v.index] = static_cast<std::int16_t>(c);
  return y_product(drop_empty(m.s)).shifted(x);
}

LaurentPoly LaurentOracle::cluster_monomial(const ClusterMonomialIndex& idx) const {
  return monomial(MonomialIndex{idx.u(), multiset_to_nested(ys_.graph(), idx.t())});
}

LaurentPoly LaurentOracle::combination(const ClusterCombination& c) const {
  LaurentPoly sum(ys_.graph().size());
  for (const auto& [idx, k] : c.terms()) sum += cluster_monomial(idx).times(k);
  return sum;
}

// --------------------------------------------------------------- rendering

std::string format_cluster_monomial(const Digraph& g, const ClusterMonomialIndex& idx) {
  std::string out;
  for (VertexId v : idx.u().elements()) {
    if (!out.empty()) out += "·";
    out += "X_" + g.label(v);
  }
  SetMultiset n = multiset_to_nested(g, idx.t());
  std::vector<VertexSet> members;
  for (const auto& [s, c] : n) members.insert(members.end(), static_cast<std::size_t>(c), s);
  for (VertexSet s : members) {
    if (!out.empty()) out += "·";
    out += "Y" + format_set(g, s);
  }
  return out.empty() ? "1" : out;
}

std::string format_combination(const Digraph& g, const ClusterCombination& c) {
  std::string out;
  for (const auto& [idx, k] : c.terms()) {
    out += k.to_string(g.labels()) + "  U=" + format_multiset(g, idx.u()) + " T=" + format_multiset(g, idx.t()) +
           "  " + format_cluster_monomial(g, idx) + "\n";
  }
  return out;
}

}  // namespace glp
