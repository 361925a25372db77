#pragma once

#include <cstdint>
#include <vector>

#include "glp/digraph.hpp"

namespace glp {

// Generators for test and scan corpora.  Vertices are labelled "1".."n".

// One representative per isomorphism class of loopless digraphs on n
// vertices, n <= 4.  Representatives minimise the adjacency bitmask over all
// relabellings; the list is sorted by that mask.
std::vector<Digraph> all_digraphs_up_to_isomorphism(int n);

// One representative per isomorphism class of trees on n vertices, every
// undirected edge present in both directions.  n <= 7.
std::vector<Digraph> all_trees_up_to_isomorphism(int n);

// Each ordered pair (u, v), u != v, is an edge with probability 1/2.  Uses
// the raw mt19937_64 stream so the graph depends only on (n, seed).
Digraph random_digraph(int n, std::uint64_t seed);

// Digraph on labels "1".."n" from a list of 0-based edges.
Digraph numbered_digraph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace glp
