#include "glp/graph_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "glp/error.hpp"

namespace glp {

namespace {

using Adjacency = std::uint32_t;  // bit u*n+v for edge u -> v

Adjacency permuted(Adjacency adj, int n, const std::vector<int>& perm) {
  Adjacency out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj >> (u * n + v) & 1u) out |= Adjacency{1} << (perm[u] * n + perm[v]);
  return out;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Adjacency canonical(Adjacency adj, int n, const std::vector<std::vector<int>>& perms) {
  Adjacency best = adj;
  for (const auto& p : perms) best = std::min(best, permuted(adj, n, p));
  return best;
}

Digraph from_adjacency(int n, Adjacency adj) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adj >> (u * n + v) & 1u) edges.emplace_back(u, v);
  return numbered_digraph(n, edges);
}

}  // namespace

Digraph numbered_digraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : edges) named.emplace_back(labels[u], labels[v]);
  return Digraph(labels, named);
}

std::vector<Digraph> all_digraphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 4) throw PreconditionError("all_digraphs_up_to_isomorphism supports n <= 4");
  auto perms = permutations(n);
  std::vector<int> off_diagonal;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) off_diagonal.push_back(u * n + v);
  std::set<Adjacency> classes;
  for (std::uint32_t pick = 0; pick < (1u << off_diagonal.size()); ++pick) {
    Adjacency adj = 0;
    for (std::size_t k = 0; k < off_diagonal.size(); ++k)
      if (pick >> k & 1u) adj |= Adjacency{1} << off_diagonal[k];
    classes.insert(canonical(adj, n, perms));
  }
  std::vector<Digraph> out;
  for (Adjacency a : classes) out.push_back(from_adjacency(n, a));
  return out;
}

namespace {

// Parenthesis code of the tree rooted at v, children sorted.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Least rooted code over all roots: equal exactly for isomorphic trees.
std::string tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::string best;
  for (int r = 0; r < n; ++r) {
    std::string c = rooted_code(adj, r, -1);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

std::vector<Digraph> all_trees_up_to_isomorphism(int n) {
  if (n < 1 || n > 7) throw PreconditionError("all_trees_up_to_isomorphism supports 1 <= n <= 7");
  if (n <= 2) return {from_adjacency(n, n == 2 ? 0b0110u : 0u)};
  std::map<std::string, std::vector<std::pair<int, int>>> classes;
  // Prüfer sequences enumerate every labelled tree once.
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
      int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);

    // First labelled tree seen per class, keyed by its unrooted code.
    classes.emplace(tree_code(n, edges), edges);

    int k = 0;
    while (k < n - 2 && ++seq[k] == n) seq[k++] = 0;
    if (k == n - 2) break;
  }
  std::vector<Digraph> out;
  for (const auto& [code, e] : classes) {
    std::vector<std::pair<int, int>> both;
    for (auto [u, v] : e) {
      both.emplace_back(u, v);
      both.emplace_back(v, u);
    }
    out.push_back(numbered_digraph(n, both));
  }
  return out;
}

Digraph random_digraph(int n, std::uint64_t seed) {
  if (n < 0 || n > static_cast<int>(kMaxVertices)) throw PreconditionError("random_digraph size out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (rng() >> 63)) edges.emplace_back(u, v);
  return numbered_digraph(n, edges);
}

}  // namespace glp
