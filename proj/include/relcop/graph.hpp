#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace relcop {

inline constexpr int kMaxVertices = 64;

// Bitset over vertices 0..n-1 of some host graph.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// Simple undirected graph on at most 64 vertices. Adjacency rows are
// machine-word bitsets; values are immutable in spirit (all operations below
// return fresh graphs) and safe to share across threads.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] = neighbour bitset, v not in adj[v]

  Graph() = default;
  explicit Graph(int order);
  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int degree(int v) const;
  int edge_count() const;
  VertexSet full_set() const { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;
};

// Relabel-invariant certificate: equal bytes iff the graphs are isomorphic.
struct CanonicalKey {
  std::string bytes;
  bool operator==(const CanonicalKey&) const = default;
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
};

// Vertex deletions relabel survivors in order (gap-closing), so results are
// deterministic.
Graph delete_vertex(const Graph& g, int v);
Graph contract_close(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// perm[old] = new label; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// The empty graph counts as connected (it only arises as an intermediate of
// neighbourhood deletion).
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g);

CanonicalKey canonical_key(const Graph& g);
// Exhaustive-permutation fallback, usable as an oracle for n <= 9.
CanonicalKey canonical_key_bruteforce(const Graph& g);
// A canonical key decodes back to its representative graph.
Graph graph_from_key(const CanonicalKey& key);

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace relcop
