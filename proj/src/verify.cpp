#include "glp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "glp/graph_io.hpp"

namespace glp {

namespace {

LaurentMonomialIndex witness_of(const ClusterMonomialIndex& idx) { return LaurentMonomialIndex(idx.u(), idx.t()); }

std::int64_t rank_key(const ClusterMonomialIndex& idx) {
  return static_cast<std::int64_t>(idx.u().total()) - static_cast<std::int64_t>(idx.t().total());
}

std::string render_index(const Digraph& g, const ClusterMonomialIndex& idx) {
  return "(U=" + format_multiset(g, idx.u()) + ",T=" + format_multiset(g, idx.t()) + ")";
}

}  // namespace

CoefPoly check_leading_coefficient(const YCache& ys, const ClusterMonomialIndex& idx) {
  const Digraph& g = ys.graph();
  LaurentPoly p = LaurentOracle(ys).cluster_monomial(idx);
  CoefPoly c = coefficient_of(p, witness_of(idx));
  if (c != CoefPoly::a_product(g.size(), idx.t()))
    throw AssertionFailure("leading coefficient of " + render_index(g, idx) + " is " + c.to_string(g.labels()));
  return c;
}

CoefPoly check_leading_coefficient(const Digraph& g, const ClusterMonomialIndex& idx) {
  YCache ys(g);
  return check_leading_coefficient(ys, idx);
}

bool check_vanishing_coefficient(const YCache& ys, const ClusterMonomialIndex& idx1, const ClusterMonomialIndex& idx2) {
  bool applies = !idx1.u().is_contained_in(idx2.u()) || !idx2.t().is_contained_in(idx1.t());
  if (!applies) return false;
  const Digraph& g = ys.graph();
  CoefPoly c = coefficient_of(LaurentOracle(ys).cluster_monomial(idx1), witness_of(idx2));
  if (!c.is_zero())
    throw AssertionFailure("coefficient of the witness of " + render_index(g, idx2) + " in " + render_index(g, idx1) +
                           " is " + c.to_string(g.labels()));
  return true;
}

bool check_vanishing_coefficient(const Digraph& g, const ClusterMonomialIndex& idx1, const ClusterMonomialIndex& idx2) {
  YCache ys(g);
  return check_vanishing_coefficient(ys, idx1, idx2);
}

IndependenceReport check_independence(const YCache& ys, const std::vector<ClusterMonomialIndex>& indices) {
  const Digraph& g = ys.graph();
  std::vector<ClusterMonomialIndex> order = indices;
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    auto ka = rank_key(a), kb = rank_key(b);
    return ka != kb ? ka < kb : a < b;
  });
  if (std::adjacent_find(order.begin(), order.end()) != order.end())
    throw PreconditionError("check_independence needs distinct indices");

  LaurentOracle oracle(ys);
  std::vector<LaurentPoly> polys;
  for (const auto& idx : order) polys.push_back(oracle.cluster_monomial(idx));

  IndependenceReport report;
  for (std::size_t i = 0; i < order.size(); ++i) {
    LaurentMonomialIndex w = witness_of(order[i]);
    CoefPoly lead = coefficient_of(polys[i], w);
    if (lead.is_zero()) throw AssertionFailure("zero leading coefficient for " + render_index(g, order[i]));
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!coefficient_of(polys[j], w).is_zero())
        throw AssertionFailure("witness of " + render_index(g, order[i]) + " occurs in " + render_index(g, order[j]));
    report.entries.push_back(IndependenceEntry{order[i], w, lead});
  }
  return report;
}

IndependenceReport check_independence(const Digraph& g, const std::vector<ClusterMonomialIndex>& indices) {
  YCache ys(g);
  return check_independence(ys, indices);
}

// ------------------------------------------------------------------- scan

std::size_t ScanReport::findings() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.finding; }));
}

std::size_t ScanReport::findings_of(const std::string& kind) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.finding && r.kind == kind; }));
}

std::string render_record(const ScanRecord& r) {
  return std::string("status=") + (r.finding ? "finding" : "ok") + " kind=" + r.kind + " graph=" + r.graph +
         " detail=" + r.detail;
}

std::string ScanReport::summary() const {
  return "summary graphs=" + std::to_string(graphs) + " records=" + std::to_string(records.size()) +
         " findings=" + std::to_string(findings()) + " y-positivity=" + std::to_string(findings_of("y-positivity")) +
         " span-positivity=" + std::to_string(findings_of("span-positivity")) +
         " oracle=" + std::to_string(findings_of("oracle"));
}

std::string ScanReport::render() const {
  std::string out;
  for (const auto& r : records) out += render_record(r) + "\n";
  return out + summary() + "\n";
}

namespace {

struct WorkItem {
  std::size_t graph;
  MonomialIndex monomial;
};

std::string flatten(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

std::string render_terms(const Digraph& g, const ClusterCombination& c) {
  std::string out = "[";
  bool first = true;
  for (const auto& [idx, k] : c.terms()) {
    if (!first) out += "; ";
    first = false;
    out += k.to_string(g.labels()) + " " + render_index(g, idx);
  }
  return out + "]";
}

std::vector<SetMultiset> y_indices(const Digraph& g, const ScanBudget& b) {
  std::vector<VertexSet> members;
  for (VertexSet s : strongly_connected_subsets(g, g.vertices()))
    if (!s.empty() && static_cast<int>(s.size()) <= b.max_member_size) members.push_back(s);
  std::vector<SetMultiset> out;
  SetMultiset current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (!current.empty()) out.push_back(current);
    if (left == 0) return;
    for (std::size_t k = from; k < members.size(); ++k) {
      current.add(members[k]);
      rec(k, left - 1);
      current.remove(members[k]);
    }
  };
  rec(0, b.max_members);
  return out;
}

std::vector<VertexMultiset> u_indices(const Digraph& g, int max_u) {
  std::vector<VertexMultiset> out;
  VertexMultiset current;
  std::vector<VertexId> verts = g.vertices().to_vector();
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (!current.empty()) out.push_back(current);
    if (left == 0) return;
    for (std::size_t k = from; k < verts.size(); ++k) {
      current.add(verts[k]);
      rec(k, left - 1);
      current.remove(verts[k]);
    }
  };
  rec(0, max_u);
  return out;
}

}  // namespace

ScanReport scan_positivity(const std::vector<Digraph>& graphs, const ScanBudget& budget) {
  if (budget.max_members < 1 || budget.max_member_size < 1 || budget.max_u < 0)
    throw PreconditionError("scan budget admits no monomials");
  if (budget.jobs < 1) throw PreconditionError("scan needs at least one job");

  std::vector<WorkItem> items;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Digraph& g = graphs[gi];
    std::vector<VertexMultiset> us = u_indices(g, budget.max_u);
    for (const SetMultiset& s : y_indices(g, budget)) {
      items.push_back(WorkItem{gi, MonomialIndex{{}, s}});
      VertexSet covered;
      for (const auto& [set, c] : s) covered = covered | set;
      for (const VertexMultiset& u : us)
        if (support(u).intersects(covered)) items.push_back(WorkItem{gi, MonomialIndex{u, s}});
    }
  }

  std::vector<std::unique_ptr<YCache>> caches;
  std::vector<std::unique_ptr<LaurentOracle>> oracles;
  std::vector<std::string> hashes;
  for (const Digraph& g : graphs) {
    caches.push_back(std::make_unique<YCache>(g));
    oracles.push_back(std::make_unique<LaurentOracle>(*caches.back()));
    hashes.push_back(graph_hash(g));
  }

  std::vector<std::vector<ScanRecord>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mu;
  std::exception_ptr failure;
  auto worker = [&] {
    std::vector<std::unique_ptr<Expander>> expanders(graphs.size());
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) try {
      const WorkItem& item = items[k];
      const Digraph& g = graphs[item.graph];
      if (!expanders[item.graph]) expanders[item.graph] = std::make_unique<Expander>(g);
      Expander& ex = *expanders[item.graph];
      const bool y_only = item.monomial.u.empty();
      ClusterCombination c = y_only ? ex.y_span_expand(item.monomial.s) : ex.span_expand(item.monomial);

      std::string index = "U=" + format_multiset(g, item.monomial.u) + " S=" + format_collection(g, item.monomial.s);
      const std::string kind = y_only ? "y-positivity" : "span-positivity";
      bool ok = y_only ? c.has_integer_coefficients() && c.is_coefficientwise_nonnegative()
                       : c.is_coefficientwise_nonnegative();
      auto full = [&] {
        return " graph_text=" + flatten(format_graph(g)) + " combination=" + render_terms(g, c) +
               " monomial=" + oracles[item.graph]->monomial(item.monomial).to_string(g.labels());
      };
      auto& out = results[k];
      out.push_back(ScanRecord{!ok, kind, hashes[item.graph], index + " terms=" + std::to_string(c.size()) +
                                                                  (ok ? std::string() : full())});
      if (budget.check_oracle &&
          oracles[item.graph]->combination(c) != oracles[item.graph]->monomial(item.monomial))
        out.push_back(ScanRecord{true, "oracle", hashes[item.graph], index + full()});
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = items.size();
    }
  };
  const int jobs = std::min<int>(budget.jobs, static_cast<int>(std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ScanReport report;
  report.graphs = graphs.size();
  for (auto& r : results)
    for (auto& rec : r) report.records.push_back(std::move(rec));
  return report;
}

ScanReport scan_positivity(const Digraph& g, const ScanBudget& budget) {
  return scan_positivity(std::vector<Digraph>{g}, budget);
}

}  // namespace glp
