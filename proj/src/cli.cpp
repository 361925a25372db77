#include "glp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "glp/expand.hpp"
#include "glp/graph_gen.hpp"
#include "glp/graph_io.hpp"
#include "glp/verify.hpp"

namespace glp {

namespace {

using nlohmann::ordered_json;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

VertexId vertex(const Digraph& g, const std::string& label) {
  if (label.empty()) throw ParseError(0, "empty vertex label");
  return g.id(label);
}

std::vector<std::string> labels_of(const Digraph& g, const VertexMultiset& m) {
  std::vector<std::string> out;
  for (VertexId v : m.elements()) out.push_back(g.label(v));
  return out;
}

ordered_json combination_json(const Digraph& g, const ClusterCombination& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, k] : c.terms())
    terms.push_back({{"coefficient", k.to_string(g.labels())},
                     {"U", labels_of(g, idx.u())},
                     {"T", labels_of(g, idx.t())},
                     {"monomial", format_cluster_monomial(g, idx)}});
  return terms;
}

struct Options {
  bool json = false;

  std::string graph;
  std::string set;
  bool fraction = false;

  std::string spec;
  bool check = false;

  bool count = false;

  int all_graphs = 0;
  int all_trees = 0;
  ScanBudget budget;
  bool no_oracle = false;
};

int cmd_compute_y(const Options& o, std::ostream& out) {
  Digraph g = load_graph(o.graph);
  VertexSet s = parse_vertex_list(g, o.set);
  LaurentPoly y = compute_Y(g, s);
  if (o.json) {
    std::vector<std::string> set;
    for (VertexId v : s) set.push_back(g.label(v));
    out << ordered_json{{"schema", 1},
                        {"command", "compute-y"},
                        {"set", set},
                        {"polynomial", y.to_string(g.labels())},
                        {"fraction", y.to_fraction_string(g.labels())},
                        {"terms", y.term_count()}}
               .dump()
        << "\n";
  } else {
    out << (o.fraction ? y.to_fraction_string(g.labels()) : y.to_string(g.labels())) << "\n";
  }
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
  Digraph g = load_graph(o.graph);
  MonomialIndex m = parse_monomial_spec(g, o.spec);
  ClusterCombination c = span_expand(g, m);
  std::optional<bool> equal;
  if (o.check) {
    YCache ys(g);
    LaurentOracle oracle(ys);
    equal = oracle.combination(c) == oracle.monomial(m);
  }
  if (o.json) {
    ordered_json j{{"schema", 1},
                   {"command", "expand"},
                   {"input", {{"U", labels_of(g, m.u)}, {"S", format_collection(g, m.s)}}},
                   {"terms", combination_json(g, c)}};
    if (equal) j["oracle"] = *equal ? "equal" : "mismatch";
    out << j.dump() << "\n";
  } else {
    out << format_combination(g, c);
    if (equal) out << "oracle: " << (*equal ? "equal" : "mismatch") << "\n";
  }
  if (equal && !*equal) {
    err << "glp: expansion does not match the oracle\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_clusters(const Options& o, std::ostream& out) {
  Digraph g = load_graph(o.graph);
  std::vector<Cluster> clusters = enumerate_clusters(g);
  if (o.json) {
    ordered_json j{{"schema", 1}, {"command", "clusters"}, {"count", clusters.size()}};
    if (!o.count) {
      ordered_json list = ordered_json::array();
      for (const Cluster& c : clusters) {
        std::vector<std::string> nested;
        for (VertexSet s : c.nested) nested.push_back(format_set(g, s));
        list.push_back({{"U", format_set(g, c.u)}, {"nested", nested}});
      }
      j["clusters"] = list;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (!o.count)
    for (const Cluster& c : clusters) out << "U=" << format_set(g, c.u) << " N=" << format_collection(g, c.nested) << "\n";
  out << (o.count ? "" : "count=") << clusters.size() << "\n";
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  int sources = (!o.graph.empty()) + (o.all_graphs > 0) + (o.all_trees > 0);
  if (sources != 1) throw CLI::ValidationError("scan", "give exactly one of GRAPH, --all-graphs N, --all-trees N");
  std::vector<Digraph> graphs;
  if (!o.graph.empty()) graphs.push_back(load_graph(o.graph));
  for (int n = 1; n <= o.all_graphs; ++n)
    for (Digraph& g : all_digraphs_up_to_isomorphism(n)) graphs.push_back(std::move(g));
  for (int n = 1; n <= o.all_trees; ++n)
    for (Digraph& g : all_trees_up_to_isomorphism(n)) graphs.push_back(std::move(g));
  ScanBudget b = o.budget;
  b.check_oracle = !o.no_oracle;
  ScanReport r = scan_positivity(graphs, b);
  if (o.json) {
    for (const ScanRecord& rec : r.records)
      out << ordered_json{{"schema", 1},
                          {"status", rec.finding ? "finding" : "ok"},
                          {"kind", rec.kind},
                          {"graph", rec.graph},
                          {"detail", rec.detail}}
                 .dump()
          << "\n";
    out << ordered_json{{"schema", 1},
                        {"summary", {{"graphs", r.graphs},
                                     {"records", r.records.size()},
                                     {"findings", r.findings()},
                                     {"y-positivity", r.findings_of("y-positivity")},
                                     {"span-positivity", r.findings_of("span-positivity")},
                                     {"oracle", r.findings_of("oracle")}}}}
               .dump()
        << "\n";
  } else {
    out << r.render();
  }
  return r.findings() ? kExitFindings : kExitOk;
}

}  // namespace

VertexSet parse_vertex_list(const Digraph& g, std::string_view text) {
  VertexSet s;
  if (trim(text).empty()) return s;
  for (const std::string& label : split(text, ',')) s.insert(vertex(g, label));
  return s;
}

MonomialIndex parse_monomial_spec(const Digraph& g, std::string_view text) {
  MonomialIndex m;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.rfind("X:", 0) == 0) {
      for (const std::string& label : split(std::string_view(token).substr(2), ',')) m.u.add(vertex(g, label));
    } else if (token.rfind("Y:", 0) == 0) {
      std::string_view rest = std::string_view(token).substr(2);
      while (!rest.empty()) {
        if (rest.front() != '{') throw ParseError(0, "expected '{' in '" + token + "'");
        auto close = rest.find('}');
        if (close == std::string_view::npos) throw ParseError(0, "unclosed '{' in '" + token + "'");
        m.s.add(parse_vertex_list(g, rest.substr(1, close - 1)));
        rest.remove_prefix(close + 1);
        if (!rest.empty()) {
          if (rest.front() != ',') throw ParseError(0, "expected ',' between sets in '" + token + "'");
          rest.remove_prefix(1);
        }
      }
    } else {
      throw ParseError(0, "unrecognised monomial token '" + token + "'");
    }
  }
  return m;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph LP algebras: Y polynomials, clusters, cluster-monomial expansions"};
  app.name("glp");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Structured output");

  auto* y = app.add_subcommand("compute-y", "Print Y_I");
  y->add_option("graph", o.graph, "Graph file")->required();
  y->add_option("--set", o.set, "Comma-separated vertices of I");
  y->add_flag("--fraction", o.fraction, "Numerator over monomial denominator");

  auto* ex = app.add_subcommand("expand", "Expand a monomial into cluster monomials");
  ex->add_option("graph", o.graph, "Graph file")->required();
  ex->add_option("monomial", o.spec, "e.g. \"X:1 Y:{1,2},{3}\"")->required();
  ex->add_flag("--check", o.check, "Compare against the Laurent oracle");

  auto* cl = app.add_subcommand("clusters", "List clusters");
  cl->add_option("graph", o.graph, "Graph file")->required();
  cl->add_flag("--count", o.count, "Print the total only");

  auto* sc = app.add_subcommand("scan", "Positivity scan");
  sc->add_option("graph", o.graph, "Graph file");
  sc->add_option("--all-graphs", o.all_graphs, "All digraphs up to isomorphism with 1..N vertices")
      ->check(CLI::Range(1, 4));
  sc->add_option("--all-trees", o.all_trees, "All trees up to isomorphism with 1..N vertices")->check(CLI::Range(1, 7));
  sc->add_option("--members", o.budget.max_members, "Y factors per monomial")->capture_default_str();
  sc->add_option("--member-size", o.budget.max_member_size, "Vertices per Y factor")->capture_default_str();
  sc->add_option("--u-size", o.budget.max_u, "X factors per monomial")->capture_default_str();
  sc->add_option("--jobs", o.budget.jobs, "Worker threads")->capture_default_str();
  sc->add_flag("--no-oracle", o.no_oracle, "Skip the oracle re-expansion");

  try {
    app.parse(argc, argv);
    if (*y) return cmd_compute_y(o, out);
    if (*ex) return cmd_expand(o, out, err);
    if (*cl) return cmd_clusters(o, out);
    return cmd_scan(o, out);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "glp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownVertex& e) {
    err << "glp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "glp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "glp: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace glp
