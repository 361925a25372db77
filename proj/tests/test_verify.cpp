#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "glp/expand.hpp"
#include "glp/verify.hpp"

using namespace glp;

namespace {

// Cluster indices with |T| <= t_size and |U| <= u_size, U off the support of T.
std::vector<ClusterMonomialIndex> indices(const Digraph& g, int t_size, int u_size) {
  std::vector<ClusterMonomialIndex> out;
  for (const auto& t : fx::multisets_up_to(g.vertices(), t_size))
    for (const auto& u : fx::multisets_up_to(g.vertices() - support(t), u_size)) out.emplace_back(u, t);
  return out;
}

// Coefficient of X^U / X^T in X^U ∏_i Y_{T<i>}, by brute force.
CoefPoly brute_coefficient(const Digraph& g, const ClusterMonomialIndex& idx, const LaurentMonomialIndex& w) {
  LaurentPoly p = LaurentPoly::laurent_monomial(g.size(), LaurentMonomialIndex(idx.u(), {}));
  for (int i = 1; i <= idx.t().max_multiplicity(); ++i) {
    VertexSet layer;
    for (VertexId v : idx.t().layer(i)) layer.insert(v);
    p *= oracle::y(g, layer);
  }
  return coefficient_of(p, w);
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("leading coefficients") {
  Digraph g = fx::bidirected4();
  CHECK(check_leading_coefficient(g, ClusterMonomialIndex(fx::ms(g, {"1", "3"}), {})) == CoefPoly::constant(4, 1));
  CHECK(check_leading_coefficient(g, ClusterMonomialIndex({}, fx::ms(g, {"1", "2"}))) ==
        CoefPoly::a(4, g.id("1")) * CoefPoly::a(4, g.id("2")));

  for (const Digraph& h : fx::digraphs_up_to(4)) {
    YCache ys(h);
    for (const auto& idx : indices(h, 3, 4)) {
      CoefPoly c = check_leading_coefficient(ys, idx);
      if (h.size() <= 3) CHECK(c == brute_coefficient(h, idx, LaurentMonomialIndex(idx.u(), idx.t())));
    }
  }
}

TEST_CASE("vanishing coefficients") {
  Digraph g = fx::bidirected4();
  ClusterMonomialIndex a(fx::ms(g, {"1"}), {}), b;
  CHECK(check_vanishing_coefficient(g, a, b));
  CHECK_FALSE(check_vanishing_coefficient(g, a, a));

  auto run = [](const Digraph& h, bool brute) {
    YCache ys(h);
    auto idx = indices(h, 3, 1);
    std::size_t applied = 0;
    for (const auto& i1 : idx)
      for (const auto& i2 : idx) {
        bool applies = check_vanishing_coefficient(ys, i1, i2);
        applied += applies;
        if (brute && applies) CHECK(brute_coefficient(h, i1, LaurentMonomialIndex(i2.u(), i2.t())).is_zero());
      }
    CHECK(applied > 0);
  };
  for (const Digraph& h : fx::digraphs_up_to(3)) run(h, true);
  run(fx::bidirected4(), false);
  run(fx::two_cycles(), false);
}

TEST_CASE("independence certificates") {
  Digraph g = fx::bidirected4();
  std::vector<ClusterMonomialIndex> family;
  for (const auto& t : fx::multisets_up_to(g.vertices(), 2)) family.emplace_back(VertexMultiset{}, t);
  auto report = check_independence(g, family);
  REQUIRE(report.entries.size() == family.size());
  for (std::size_t i = 0; i + 1 < report.entries.size(); ++i) {
    const auto& x = report.entries[i].index;
    const auto& y = report.entries[i + 1].index;
    CHECK(x.u().total() - x.t().total() <= y.u().total() - y.t().total());
  }
  for (const auto& e : report.entries) CHECK(e.leading == CoefPoly::a_product(4, e.index.t()));

  CHECK(check_independence(g, {ClusterMonomialIndex(fx::ms(g, {"2"}), fx::ms(g, {"1"}))}).entries.size() == 1);
  CHECK_THROWS_AS(check_independence(g, {family[3], family[3]}), PreconditionError);

  // Mixed U and T on small graphs.
  for (const Digraph& h : fx::digraphs_up_to(3)) {
    auto all = indices(h, 2, 1);
    CHECK(check_independence(h, all).entries.size() == all.size());
  }
}

TEST_CASE("scan on trees finds nothing") {
  ScanBudget budget;
  budget.max_u = 2;
  auto report = scan_positivity(fx::trees_up_to(5), budget);
  CHECK(report.graphs == 8);
  CHECK(report.findings() == 0);
  CHECK_FALSE(report.records.empty());
  for (const auto& r : report.records) CHECK(r.kind != "oracle");
  CHECK(report.summary().rfind("summary graphs=8 ", 0) == 0);
}

TEST_CASE("scan records and determinism") {
  std::vector<Digraph> graphs = fx::digraphs_up_to(3);
  ScanBudget one;
  ScanBudget many = one;
  many.jobs = 3;
  auto a = scan_positivity(graphs, one);
  auto b = scan_positivity(graphs, many);
  CHECK(a.render() == b.render());
  CHECK(a.graphs == graphs.size());
  CHECK(a.findings_of("oracle") == 0);
  std::string first = render_record(a.records.front());
  CHECK(first.rfind("status=ok kind=y-positivity graph=", 0) == 0);
  CHECK(first.find(" detail=U={} S=") != std::string::npos);

  ScanBudget empty;
  empty.max_members = 0;
  CHECK_THROWS_AS(scan_positivity(graphs, empty), PreconditionError);
  ScanBudget no_jobs;
  no_jobs.jobs = 0;
  CHECK_THROWS_AS(scan_positivity(graphs, no_jobs), PreconditionError);
}

TEST_CASE("single-vertex scan") {
  Digraph g = parse_graph("vertices: v\n");
  auto report = scan_positivity(g, ScanBudget{});
  // Y_v, Y_v², and X_v with each.
  CHECK(report.records.size() == 4);
  CHECK(report.findings() == 0);
}

TEST_SUITE_END();
