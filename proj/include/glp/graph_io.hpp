#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "glp/digraph.hpp"

namespace glp {

// Graph text format:
//
//   # comment
//   vertices: 1 2 3 4
//   1 -> 2
//   3 -- 4        (both directions)
//
// Throws ParseError carrying the offending line number.
Digraph parse_graph(std::istream& in);
Digraph parse_graph(std::string_view text);
Digraph load_graph(const std::string& path);

// Inverse of parse_graph; one directed edge per line in (from, to) order.
std::string format_graph(const Digraph& g);

// 64-bit FNV-1a hash of format_graph(g), as 16 hex digits.
std::string graph_hash(const Digraph& g);

}  // namespace glp
