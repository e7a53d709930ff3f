#include "relcop/enumerate.hpp"

#include <ostream>
#include <stdexcept>

namespace relcop {

namespace {

void check_bounds(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("enumerate: n >= 1 required");
  const long long max_edges = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
  if (spec.cyclomatic < 0 || spec.n - 1 + spec.cyclomatic > max_edges)
    throw std::invalid_argument("enumerate: cyclomatic number out of range for order");
  const bool ok = spec.n <= 8 || (spec.cyclomatic <= 2 && spec.n <= 11) || (spec.cyclomatic == 3 && spec.n <= 10);
  if (!ok)
    throw std::invalid_argument(
        "enumerate: bound exceeded (n <= 8 for any m; n <= 11 for m <= 2; n <= 10 for m == 3)");
}

// All trees on n vertices up to isomorphism, as canonical keys. Leaf
// augmentation is complete: every tree on k+1 vertices arises from a tree on
// k vertices by attaching its last leaf.
std::set<std::string> tree_keys(int n) {
  std::set<std::string> level{canonical_key(Graph(1)).bytes};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> next;
    for (const std::string& bytes : level) {
      const Graph t = graph_from_key(CanonicalKey{bytes});
      for (int v = 0; v < t.n; ++v) {
        Graph grown(t.n + 1);
        grown.adj = t.adj;
        grown.adj.push_back(0);
        grown.add_edge(v, t.n);
        next.insert(canonical_key(grown).bytes);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::set<std::string> enumerate_keys(const GenSpec& spec) {
  check_bounds(spec);
  std::set<std::string> level = tree_keys(spec.n);
  for (int c = 1; c <= spec.cyclomatic; ++c) {
    std::set<std::string> next;
    for (const std::string& bytes : level) {
      const Graph g = graph_from_key(CanonicalKey{bytes});
      for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph grown = g;
          grown.add_edge(u, v);
          next.insert(canonical_key(grown).bytes);
        }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> enumerate_class(const GenSpec& spec) {
  std::vector<Graph> out;
  for (const std::string& bytes : enumerate_keys(spec)) out.push_back(graph_from_key(CanonicalKey{bytes}));
  return out;
}

long long enumerate_count(const GenSpec& spec) { return static_cast<long long>(enumerate_keys(spec).size()); }

std::set<std::string> enumerate_keys_bruteforce(const GenSpec& spec) {
  if (spec.n > 7) throw std::invalid_argument("enumerate_keys_bruteforce: n <= 7 only");
  check_bounds(spec);
  const int n = spec.n;
  const int slots = n * (n - 1) / 2;
  const int want = n - 1 + spec.cyclomatic;
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);

  std::set<std::string> keys;
  if (want == 0 && n == 1) {
    keys.insert(canonical_key(Graph(1)).bytes);
    return keys;
  }
  if (want > slots || want < 0) return keys;

  std::vector<int> pick(want);
  for (int i = 0; i < want; ++i) pick[i] = i;
  for (;;) {
    Graph g(n);
    for (int i : pick) g.add_edge(all_edges[i].first, all_edges[i].second);
    if (is_connected(g)) keys.insert(canonical_key(g).bytes);
    int i = want - 1;
    while (i >= 0 && pick[i] == slots - want + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  return keys;
}

std::vector<Graph> enumerate_connected_all(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_connected_all: n <= 8 only");
  const int max_m = n * (n - 1) / 2 - (n - 1);
  std::set<std::string> all;
  std::set<std::string> level = tree_keys(n);
  all.insert(level.begin(), level.end());
  for (int c = 1; c <= max_m; ++c) {
    std::set<std::string> next;
    for (const std::string& bytes : level) {
      const Graph g = graph_from_key(CanonicalKey{bytes});
      for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph grown = g;
          grown.add_edge(u, v);
          next.insert(canonical_key(grown).bytes);
        }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(all.size());
  for (const std::string& bytes : all) out.push_back(graph_from_key(CanonicalKey{bytes}));
  return out;
}

void enumerate_to_stream(const GenSpec& spec, std::ostream& out) {
  for (const Graph& g : enumerate_class(spec)) out << emit_graph6(g) << "\n";
}

}  // namespace relcop
