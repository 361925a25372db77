#include <doctest.h>

#include <random>
#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace glp;

namespace {

Multiset<Edge> edges(const Digraph& g, const std::vector<std::pair<std::string, std::string>>& list) {
  Multiset<Edge> out;
  for (auto& [u, w] : list) out.add(Edge{g.id(u), g.id(w)});
  return out;
}

// Random function on s given as a Multifunction.
Multifunction random_function(const Digraph& g, VertexSet s, std::mt19937_64& rng) {
  FunctionImage img;
  for (VertexId v : s) {
    std::vector<VertexId> c{v};
    for (VertexId w : g.out_neighbors(v)) c.push_back(w);
    img.push_back(c[rng() % c.size()]);
  }
  return Multifunction::from_function(g, s, img);
}

}  // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("golden Y_{1,2} on the bidirected four-vertex graph") {
  Digraph g = fx::bidirected4();
  // Numerator over X_1 X_2, one term per acyclic function.
  std::vector<std::vector<std::pair<std::string, int>>> x_parts{
      {{"1", 1}}, {{"3", 1}, {"1", 1}}, {{"4", 1}, {"1", 1}}, {}, {{"2", 1}}, {{"3", 1}}, {{"4", 1}},
      {{"3", 1}}, {{"2", 1}, {"3", 1}}, {{"3", 2}}, {{"4", 1}, {"3", 1}}};
  std::vector<std::vector<std::pair<std::string, int>>> a_parts{
      {{"1", 1}}, {}, {}, {{"1", 1}, {"2", 1}}, {{"2", 1}}, {{"2", 1}}, {{"2", 1}},
      {{"1", 1}}, {}, {}, {}};
  LaurentPoly expected(4);
  for (std::size_t k = 0; k < x_parts.size(); ++k) {
    auto x = x_parts[k];
    x.emplace_back("1", -1);
    x.emplace_back("2", -1);
    expected += fx::term(g, 1, x, a_parts[k]);
  }
  LaurentPoly y = compute_Y(g, fx::set(g, "1,2"));
  CHECK(y == expected);
  CHECK(y.term_count() == 11);
  CHECK(enumerate_acyclic_functions(g, fx::set(g, "1,2")).size() == 11);
  CHECK(y.to_fraction_string(g.labels()) ==
        "(A_1·A_2 + A_2·X_4 + A_2·X_3 + A_1·X_3 + X_3·X_4 + X_3^2 + A_2·X_2 + X_2·X_3 + A_1·X_1 + X_1·X_4 + "
        "X_1·X_3)/(X_1·X_2)");
}

TEST_CASE("small Y values") {
  Digraph g = fx::path(2);
  CHECK(compute_Y(g, VertexSet{}) == LaurentPoly::constant(2, 1));
  Digraph lone = fx::path(1);
  CHECK(compute_Y(lone, lone.vertices()) == fx::term(lone, 1, {{"1", -1}}, {{"1", 1}}));
  // Y_{1} on an edge 1-2: (A_1 + X_2)/X_1.
  CHECK(compute_Y(g, fx::set(g, "1")) == fx::term(g, 1, {{"1", -1}}, {{"1", 1}}) + fx::term(g, 1, {{"1", -1}, {"2", 1}}));
}

TEST_CASE("weights of the worked multifunctions") {
  Digraph g = fx::bidirected4();
  Multifunction f(g, fx::ms(g, {"1", "1", "1", "2"}), edges(g, {{"1", "1"}, {"1", "2"}, {"1", "2"}, {"2", "3"}}));
  Multifunction h(g, fx::ms(g, {"3", "4"}), edges(g, {{"3", "4"}, {"4", "1"}}));

  CHECK(weight(f) == fx::term(g, 1, {{"2", 2}, {"3", 1}}, {{"1", 1}}));
  CHECK(normalized_weight(f) == fx::term(g, 1, {{"2", 1}, {"3", 1}, {"1", -3}}, {{"1", 1}}));
  CHECK(weight(h) == fx::term(g, 1, {{"1", 1}, {"4", 1}}));
  CHECK(normalized_weight(h) == fx::term(g, 1, {{"1", 1}, {"3", -1}}));

  Multifunction sum = multifunction_sum(f, h);
  CHECK(sum.domain() == fx::ms(g, {"1", "1", "1", "2", "3", "4"}));
  CHECK(weight(sum) == fx::term(g, 1, {{"1", 1}, {"2", 2}, {"3", 1}, {"4", 1}}, {{"1", 1}}));
  CHECK(normalized_weight(sum) == fx::term(g, 1, {{"2", 1}, {"1", -2}}, {{"1", 1}}));
  CHECK(weight(sum) == weight(f) * weight(h));
  CHECK(normalized_weight(sum) == normalized_weight(f) * normalized_weight(h));
  CHECK(f.is_acyclic());
}

TEST_CASE("weight is multiplicative on random multifunctions") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = random_digraph(4, seed);
    for (int it = 0; it < 20; ++it) {
      VertexSet a(rng() & 15), b(rng() & 15);
      auto f = random_function(g, a, rng), h = random_function(g, b, rng);
      CHECK(weight(f + h) == weight(f) * weight(h));
      CHECK(normalized_weight(f + h) == normalized_weight(f) * normalized_weight(h));
    }
  }
}

TEST_CASE("multifunction validation") {
  Digraph g = fx::two_cycles();
  CHECK_THROWS_AS(Multifunction(g, fx::ms(g, {"2"}), edges(g, {{"2", "1"}})), PreconditionError);
  CHECK_THROWS_AS(Multifunction(g, fx::ms(g, {"1", "1"}), edges(g, {{"1", "2"}})), PreconditionError);
  CHECK_THROWS_AS(Multifunction(g, fx::ms(g, {"1"}), edges(g, {{"2", "3"}})), PreconditionError);
  Multifunction cyc(g, fx::ms(g, {"1", "3"}), edges(g, {{"1", "3"}, {"3", "1"}}));
  CHECK_FALSE(cyc.is_acyclic());
}

TEST_CASE("compute_Y agrees with brute-force enumeration") {
  auto check_graph = [](const Digraph& g) {
    for_each_subset(g.vertices(), [&](VertexSet s) {
      LaurentPoly y = compute_Y(g, s);
      REQUIRE(y == oracle::y(g, s));
      CHECK(is_coefficientwise_nonnegative(y));
      std::size_t acyclic = 0;
      oracle::all_functions(g, s, [&](const std::vector<VertexId>& img) { acyclic += oracle::acyclic(s, img); });
      CHECK(y.coefficient_sum() == static_cast<std::int64_t>(acyclic));
    });
  };
  for (const Digraph& g : fx::digraphs_up_to(4)) check_graph(g);
  for (std::uint64_t seed = 100; seed < 105; ++seed) check_graph(random_digraph(5, seed));
}

TEST_CASE("acyclicity tests agree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = random_digraph(4, seed);
    for_each_subset(g.vertices(), [&](VertexSet s) {
      for_each_function(g, s, [&](const FunctionImage& img) {
        std::vector<VertexId> dense(g.size());
        std::size_t k = 0;
        for (VertexId v : s) dense[v.index] = img[k++];
        bool expect = oracle::acyclic(s, dense);
        CHECK(is_acyclic_function(s, img) == expect);
        CHECK(Multifunction::from_function(g, s, img).is_acyclic() == expect);
      });
    });
  }
}

TEST_CASE("Y factors over strongly connected components") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = random_digraph(2 + static_cast<int>(seed % 4), seed);
    YCache ys(g);
    for_each_subset(g.vertices(), [&](VertexSet s) {
      LaurentPoly product = LaurentPoly::constant(g.size(), 1);
      auto parts = y_scc_factorization(g, s);
      for (const auto& [c, y] : parts) {
        CHECK(is_strongly_connected(g, c));
        product *= y;
      }
      CHECK(ys.y(s) == product);
    });
  }
}

TEST_CASE("cycles and cycle families") {
  Digraph g = fx::two_cycles();
  auto cycles = enumerate_cycles(g, g.vertices());
  REQUIRE(cycles.size() == 4);
  CHECK(cycles[0].vertices == std::vector<VertexId>{g.id("1"), g.id("2"), g.id("3")});
  CHECK(cycles[1].vertices == std::vector<VertexId>{g.id("1"), g.id("2"), g.id("3"), g.id("4")});
  CHECK(cycles[2].vertices == std::vector<VertexId>{g.id("1"), g.id("3")});
  CHECK(cycles[3].vertices == std::vector<VertexId>{g.id("1"), g.id("3"), g.id("4")});
  // Pairwise intersecting, so only singletons plus the empty family.
  CHECK(enumerate_cycle_families(g, g.vertices()).size() == 5);
  CHECK(enumerate_cycle_families(g, VertexSet{}).size() == 1);

  // Cycles against brute force: rotations of simple paths closing at the start.
  for (const Digraph& h : fx::digraphs_up_to(4)) {
    std::size_t brute = 0;
    for (VertexId v : h.vertices())
      for (auto& p : oracle::simple_paths_from(h, v))
        brute += p.size() >= 2 && h.has_edge(p.back(), v) && *std::min_element(p.begin(), p.end()) == v;
    CHECK(enumerate_cycles(h, h.vertices()).size() == brute);
  }
}

TEST_CASE("function = cycle family + acyclic rest") {
  auto check_graph = [](const Digraph& g) {
    for_each_subset(g.vertices(), [&](VertexSet s) {
      std::size_t functions = 0;
      std::map<std::vector<Cycle>, std::size_t> by_family;
      for_each_function(g, s, [&](const FunctionImage& img) {
        ++functions;
        auto [family, rest] = decompose_function(s, img);
        VertexSet left = s - family.vertex_set();
        CHECK(is_acyclic_function(left, rest));
        ++by_family[family.cycles];
      });
      std::size_t total = 0;
      for (const CycleFamily& c : enumerate_cycle_families(g, s)) {
        std::size_t acyclic = enumerate_acyclic_functions(g, s - c.vertex_set()).size();
        CHECK(by_family[c.cycles] == acyclic);
        total += acyclic;
      }
      CHECK(total == functions);

      LaurentPoly rhs(g.size());
      for (const CycleFamily& c : enumerate_cycle_families(g, s)) rhs += compute_Y(g, s - c.vertex_set());
      CHECK(oracle::all_function_sum(g, s) == rhs);
    });
  };
  for (const Digraph& g : fx::digraphs_up_to(4)) check_graph(g);
  for (std::uint64_t seed = 0; seed < 3; ++seed) check_graph(random_digraph(5, seed));
}

TEST_CASE("cycle family covers count families by covered set") {
  Digraph g = fx::bidirected4();
  std::int64_t families = 0;
  for (auto& [s, c] : cycle_family_covers(g, g.vertices())) families += c;
  CHECK(families == static_cast<std::int64_t>(enumerate_cycle_families(g, g.vertices()).size()));
}

TEST_CASE("Y cache is safe under concurrent readers") {
  Digraph g = fx::bidirected4();
  YCache ys(g);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      for_each_subset(g.vertices(), [&](VertexSet s) { (void)ys.y(s); });
    });
  for (auto& t : pool) t.join();
  CHECK(ys.size() == 16);
  for_each_subset(g.vertices(), [&](VertexSet s) { CHECK(ys.y(s) == compute_Y(g, s)); });
}

TEST_SUITE_END();
