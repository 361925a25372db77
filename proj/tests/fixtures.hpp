#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "glp/graph_gen.hpp"
#include "glp/graph_io.hpp"
#include "glp/laurent.hpp"
#include "glp/nested.hpp"

namespace fx {

using namespace glp;

// 1-2, 1-3, 1-4, 2-3, 3-4, each in both directions.
inline Digraph bidirected4() {
  return parse_graph("vertices: 1 2 3 4\n1 -- 2\n1 -- 3\n1 -- 4\n2 -- 3\n3 -- 4\n");
}

inline Digraph two_cycles() {
  return parse_graph("vertices: 1 2 3 4\n1 -> 2\n1 -> 3\n2 -> 3\n3 -> 1\n3 -> 4\n4 -> 1\n");
}

inline Digraph tree6() { return parse_graph("vertices: 1 2 3 4 5 6\n1 -- 2\n2 -- 3\n2 -- 5\n4 -- 5\n5 -- 6\n"); }

inline Digraph path(int n) {
  std::ostringstream s;
  s << "vertices:";
  for (int i = 1; i <= n; ++i) s << ' ' << i;
  s << '\n';
  for (int i = 1; i < n; ++i) s << i << " -- " << i + 1 << '\n';
  return parse_graph(s.str());
}

inline VertexId v(const Digraph& g, const std::string& label) { return g.id(label); }

// "1,2,3" by label.
inline VertexSet set(const Digraph& g, const std::string& labels) {
  VertexSet s;
  std::string cur;
  for (char c : labels + ",") {
    if (c == ',') {
      if (!cur.empty()) s.insert(g.id(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return s;
}

inline VertexMultiset ms(const Digraph& g, const std::vector<std::string>& labels) {
  VertexMultiset m;
  for (const auto& l : labels) m.add(g.id(l));
  return m;
}

inline SetMultiset sets(const Digraph& g, const std::vector<std::string>& members) {
  SetMultiset m;
  for (const auto& s : members) m.add(set(g, s));
  return m;
}

// c · ∏ A^a ∏ X^x from (label, exponent) lists.
inline LaurentPoly term(const Digraph& g, std::int64_t c, std::vector<std::pair<std::string, int>> x,
                        std::vector<std::pair<std::string, int>> a = {}) {
  Monomial m;
  for (auto& [l, e] : x) m.x[g.id(l).index] = static_cast<std::int16_t>(m.x[g.id(l).index] + e);
  for (auto& [l, e] : a) m.a[g.id(l).index] = static_cast<std::int16_t>(m.a[g.id(l).index] + e);
  return LaurentPoly::monomial(g.size(), m, c);
}

// Every graph the exhaustive tests walk: digraph classes on 1..n vertices.
inline std::vector<Digraph> digraphs_up_to(int n) {
  std::vector<Digraph> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : all_digraphs_up_to_isomorphism(k)) out.push_back(std::move(g));
  return out;
}

inline std::vector<Digraph> trees_up_to(int n) {
  std::vector<Digraph> out;
  for (int k = 1; k <= n; ++k)
    for (auto& g : all_trees_up_to_isomorphism(k)) out.push_back(std::move(g));
  return out;
}

inline std::vector<VertexSet> nonempty_subsets(VertexSet w) {
  std::vector<VertexSet> out;
  for_each_subset(w, [&](VertexSet s) {
    if (!s.empty()) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// S with <= 2 members, each nonempty of size <= 3.
inline std::vector<SetMultiset> small_set_multisets(const Digraph& g) {
  std::vector<VertexSet> members;
  for (VertexSet s : fx::nonempty_subsets(g.vertices()))
    if (s.size() <= 3) members.push_back(s);
  std::vector<SetMultiset> out{SetMultiset{}};
  for (std::size_t a = 0; a < members.size(); ++a) {
    out.push_back(SetMultiset{members[a]});
    for (std::size_t b = a; b < members.size(); ++b) out.push_back(SetMultiset{members[a], members[b]});
  }
  return out;
}

// U with <= 2 vertices, repeats allowed.
inline std::vector<VertexMultiset> small_vertex_multisets(const Digraph& g) {
  std::vector<VertexMultiset> out{VertexMultiset{}};
  for (VertexId a : g.vertices()) {
    out.push_back(VertexMultiset{a});
    for (VertexId b : g.vertices())
      if (a <= b) out.push_back(VertexMultiset{a, b});
  }
  return out;
}

// Every vertex multiset on g with multiplicities <= cap.
inline std::vector<VertexMultiset> bounded_multisets(const Digraph& g, int cap) {
  std::vector<VertexMultiset> out;
  std::vector<int> mult(g.size(), 0);
  while (true) {
    VertexMultiset m;
    for (std::uint32_t i = 0; i < g.size(); ++i)
      if (mult[i]) m.add(VertexId{i}, mult[i]);
    out.push_back(m);
    std::size_t k = 0;
    while (k < mult.size() && ++mult[k] > cap) mult[k++] = 0;
    if (k == mult.size()) return out;
  }
}

inline std::vector<VertexMultiset> multisets_up_to(VertexSet w, int size) {
  std::vector<VertexMultiset> out{VertexMultiset{}};
  std::vector<VertexMultiset> frontier{VertexMultiset{}};
  for (int k = 0; k < size; ++k) {
    std::vector<VertexMultiset> next;
    for (const auto& m : frontier)
      for (VertexId v : w) {
        // Grow in nondecreasing vertex order so each multiset appears once.
        if (!m.empty() && v < std::prev(m.end())->first) continue;
        VertexMultiset n = m;
        n.add(v);
        next.push_back(n);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace fx
