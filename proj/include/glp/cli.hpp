#pragma once

#include <iosfwd>
#include <string_view>

#include "glp/nested.hpp"

namespace glp {

enum ExitCode : int { kExitOk = 0, kExitFindings = 1, kExitUsage = 2, kExitInternal = 3 };

// "1,2,3" -> vertex set; blank -> empty.  Throws ParseError / UnknownVertex.
VertexSet parse_vertex_list(const Digraph& g, std::string_view text);

// Monomial spec: whitespace-separated tokens `X:v,w,...` (vertices, repeats
// allowed) and `Y:{a,b},{c}` (one or more brace sets).  Every token adds to
// the multisets, so `Y:{1} Y:{1}` is Y_{1}².  Throws ParseError /
// UnknownVertex.
MonomialIndex parse_monomial_spec(const Digraph& g, std::string_view text);

// Command-line entry point; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glp
