#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "fixtures.hpp"

#include "glp/cli.hpp"
#include "glp/expand.hpp"

using namespace glp;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "glp");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::string graph(const std::string& name) { return std::string(GLP_GRAPHS_DIR) + "/" + name; }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute-y") {
  auto r = run({"compute-y", graph("bidirected4.graph"), "--set", "1,2", "--fraction"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("/(X_1·X_2)\n") != std::string::npos);
  CHECK(r.out.find("A_1·A_2") != std::string::npos);

  Digraph g = fx::bidirected4();
  auto plain = run({"compute-y", graph("bidirected4.graph"), "--set", "1,2"});
  CHECK(plain.out == compute_Y(g, fx::set(g, "1,2")).to_string(g.labels()) + "\n");

  auto j = nlohmann::json::parse(run({"--json", "compute-y", graph("bidirected4.graph"), "--set", "1,2"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["terms"] == 11);
  CHECK(j["set"] == nlohmann::json::array({"1", "2"}));
  // The flag may also follow the subcommand.
  CHECK(run({"compute-y", graph("bidirected4.graph"), "--set", "1,2", "--json"}).out ==
        run({"--json", "compute-y", graph("bidirected4.graph"), "--set", "1,2"}).out);

  CHECK(run({"compute-y", graph("bidirected4.graph"), "--set", ""}).out == "1\n");
  CHECK(run({"compute-y", graph("bidirected4.graph")}).out == "1\n");

  auto bad = run({"compute-y", graph("bidirected4.graph"), "--set", "9"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("'9'") != std::string::npos);
}

TEST_CASE("expand") {
  auto r = run({"expand", graph("tree6.graph"), "Y:{1,2,4,5} Y:{2,3,5,6}", "--check"});
  CHECK(r.rc == 0);
  CHECK(lines(r.out) == 7);
  CHECK(r.out.find("Y{2,5}·Y{1,2,3,4,5,6}") != std::string::npos);
  CHECK(r.out.find("oracle: equal\n") != std::string::npos);

  // A cluster monomial comes back as itself.
  auto c = run({"expand", graph("bidirected4.graph"), "X:1 Y:{2},{4},{2,3,4}"});
  CHECK(c.rc == 0);
  CHECK(c.out == "1  U={1} T={2,2,3,4,4}  X_1·Y{2}·Y{4}·Y{2,3,4}\n");

  auto j = nlohmann::json::parse(run({"--json", "expand", graph("two_cycles.graph"), "X:1 Y:{1,3}", "--check"}).out);
  CHECK(j["oracle"] == "equal");
  CHECK(j["command"] == "expand");
  CHECK(!j["terms"].empty());

  CHECK(run({"expand", graph("tree6.graph"), "Z:{1}"}).rc == 2);
  CHECK(run({"expand", graph("tree6.graph"), "Y:{1"}).rc == 2);
  CHECK(run({"expand", graph("tree6.graph"), "Y:{7}"}).rc == 2);
}

TEST_CASE("clusters") {
  auto one = run({"clusters", graph("single.graph")});
  CHECK(one.out == "U={} N={{v}}\nU={v} N={}\ncount=2\n");
  auto r = run({"clusters", graph("bidirected4.graph")});
  CHECK(r.out.find("U={} N={{2},{4},{2,3,4},{1,2,3,4}}\n") != std::string::npos);
  auto n = run({"clusters", graph("bidirected4.graph"), "--count"});
  CHECK(n.out == std::to_string(enumerate_clusters(fx::bidirected4()).size()) + "\n");
  auto j = nlohmann::json::parse(run({"--json", "clusters", graph("single.graph")}).out);
  CHECK(j["count"] == 2);
}

TEST_CASE("scan") {
  auto t = run({"scan", "--all-trees", "5"});
  CHECK(t.rc == 0);
  CHECK(t.out.find("summary graphs=8 ") != std::string::npos);
  CHECK(t.out.find("findings=0 ") != std::string::npos);

  auto g = run({"scan", "--all-graphs", "2", "--jobs", "2"});
  CHECK((g.rc == 0 || g.rc == 1));
  CHECK(g.out == run({"scan", "--all-graphs", "2"}).out);

  auto j = run({"--json", "scan", graph("single.graph")});
  std::istringstream in(j.out);
  std::string line, last;
  while (std::getline(in, line)) {
    auto rec = nlohmann::json::parse(line);
    CHECK(rec["schema"] == 1);
    last = line;
  }
  CHECK(nlohmann::json::parse(last)["summary"]["findings"] == 0);

  CHECK(run({"scan", "--all-trees", "3", "--members", "0"}).rc == 2);
  CHECK(run({"scan"}).rc == 2);
  CHECK(run({"scan", graph("single.graph"), "--all-trees", "2"}).rc == 2);
  CHECK(run({"scan", "--all-graphs", "9"}).rc == 2);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).rc == 2);
  CHECK(run({"frobnicate"}).rc == 2);
  CHECK(run({"--help"}).rc == 0);
  auto missing = run({"compute-y", "/nonexistent.graph"});
  CHECK(missing.rc == 2);
  CHECK(missing.err.rfind("glp: ", 0) == 0);
}

TEST_CASE("monomial spec grammar") {
  Digraph g = fx::bidirected4();
  auto m = parse_monomial_spec(g, "X:1,1,3 Y:{1,2},{3} Y:{1,2}");
  CHECK(m.u == fx::ms(g, {"1", "1", "3"}));
  CHECK(m.s == fx::sets(g, {"1,2", "1,2", "3"}));
  CHECK(parse_monomial_spec(g, "").s.empty());
  CHECK_THROWS_AS(parse_monomial_spec(g, "Y:{1}{2}"), ParseError);
  CHECK_THROWS_AS(parse_monomial_spec(g, "X:1,,2"), ParseError);
  CHECK(parse_vertex_list(g, " 1 , 4 ") == fx::set(g, "1,4"));
  CHECK_THROWS_AS(parse_vertex_list(g, "5"), UnknownVertex);
}

TEST_SUITE_END();
