#include "glp/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace glp {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Digraph parse_graph(std::istream& in) {
  std::vector<std::string> labels;
  std::set<std::string> declared;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> seen;
  bool have_vertices = false;
  std::string raw;
  int line_no = 0;

  auto add_edge = [&](const std::string& u, const std::string& v) {
    if (u == v) throw ParseError(line_no, "self-loop at vertex '" + u + "'");
    if (!seen.emplace(u, v).second) throw ParseError(line_no, "duplicate edge " + u + " -> " + v);
    edges.emplace_back(u, v);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("vertices:")) {
      if (have_vertices) throw ParseError(line_no, "duplicate 'vertices:' line");
      have_vertices = true;
      for (auto& l : split_ws(line.substr(9))) {
        if (!declared.insert(l).second) throw ParseError(line_no, "duplicate vertex label '" + l + "'");
        labels.push_back(l);
      }
      continue;
    }
    if (!have_vertices) throw ParseError(line_no, "expected 'vertices:' before edges");
    auto toks = split_ws(line);
    if (toks.size() != 3 || (toks[1] != "->" && toks[1] != "--"))
      throw ParseError(line_no, "expected 'u -> v' or 'u -- v'");
    for (int k : {0, 2})
      if (!declared.count(toks[k])) throw ParseError(line_no, "unknown vertex '" + toks[k] + "'");
    add_edge(toks[0], toks[2]);
    if (toks[1] == "--") add_edge(toks[2], toks[0]);
  }
  if (!have_vertices) throw ParseError(0, "missing 'vertices:' line");
  try {
    return Digraph(std::move(labels), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

Digraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.message());
  }
}

std::string format_graph(const Digraph& g) {
  std::string out = "vertices:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (auto [a, b] : g.edges()) out += g.label(a) + " -> " + g.label(b) + "\n";
  return out;
}

std::string graph_hash(const Digraph& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : format_graph(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace glp
