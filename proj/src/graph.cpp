#include "relcop/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace relcop {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::out_of_range("vertex index out of range");
}

int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace

Graph::Graph(int order) : n(order), adj(order, 0) {
  if (order < 0 || order > kMaxVertices) throw std::invalid_argument("graph order must be in [0, 64]");
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj[u] |= vbit(v);
  adj[v] |= vbit(u);
}

int Graph::degree(int v) const {
  check_vertex(*this, v);
  return popcount(adj[v]);
}

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n; ++v) s += popcount(adj[v]);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) e.emplace_back(u, v);
  return e;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.full_set();
  std::vector<int> newlabel(g.n, -1);
  int m = 0;
  for (int v = 0; v < g.n; ++v)
    if (s & vbit(v)) newlabel[v] = m++;
  Graph h(m);
  for (int v = 0; v < g.n; ++v) {
    if (!(s & vbit(v))) continue;
    std::uint64_t row = g.adj[v] & s;
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      if (u > v) h.add_edge(newlabel[v], newlabel[u]);
    }
  }
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.full_set() & ~vbit(v));
}

Graph contract_close(const Graph& g, int v) {
  check_vertex(g, v);
  Graph h = g;
  std::uint64_t closed = g.adj[v] | vbit(v);
  std::uint64_t nb = g.adj[v];
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    h.adj[u] |= closed & ~vbit(u);
  }
  return induced_subgraph(h, g.full_set() & ~vbit(v));
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.full_set() & ~(g.adj[v] | vbit(v)));
}

Graph join(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices) throw std::invalid_argument("join exceeds 64-vertex capacity");
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < h.n; ++v) r.add_edge(u, g.n + v);
  return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices) throw std::invalid_argument("union exceeds 64-vertex capacity");
  Graph r(g.n + h.n);
  for (int v = 0; v < g.n; ++v) r.adj[v] = g.adj[v];
  for (int v = 0; v < h.n; ++v) r.adj[g.n + v] = h.adj[v] << g.n;
  return r;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n) throw std::invalid_argument("relabel: bad permutation size");
  Graph h(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t row = g.adj[v];
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      if (u > v) h.add_edge(perm[v], perm[u]);
    }
  }
  return h;
}

bool is_connected_subset(const Graph& g, VertexSet s) {
  s &= g.full_set();
  if (s == 0) return true;
  std::uint64_t reach = s & (~s + 1);  // lowest set bit
  std::uint64_t frontier = reach;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v] & s;
    }
    frontier = next & ~reach;
    reach |= frontier;
  }
  return reach == s;
}

bool is_connected(const Graph& g) { return is_connected_subset(g, g.full_set()); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::uint64_t rest = g.full_set();
  while (rest) {
    std::uint64_t reach = rest & (~rest + 1);
    std::uint64_t frontier = reach;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[v] & rest;
      }
      frontier = next & ~reach;
      reach |= frontier;
    }
    comps.push_back(reach);
    rest &= ~reach;
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Canonical form. Individualization-refinement: refine a vertex colouring to
// equitability, then branch on the vertices of the first smallest
// non-singleton cell, keeping the lexicographically least adjacency
// certificate over all leaves. A partition whose cells are pairwise
// homogeneous (all-or-nothing adjacency within and between cells) determines
// the certificate without further branching, which keeps highly symmetric
// graphs (complete, complete multipartite, ...) out of factorial blowup.
// ---------------------------------------------------------------------------

namespace {

std::string cert_from_order(const Graph& g, const std::vector<int>& vert_at) {
  // vert_at[i] = original vertex placed at canonical position i
  const int n = g.n;
  std::string out;
  out.push_back(static_cast<char>(n));
  unsigned cur = 0;
  int nbits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      cur = (cur << 1) | (g.has_edge(vert_at[i], vert_at[j]) ? 1u : 0u);
      if (++nbits == 8) {
        out.push_back(static_cast<char>(cur));
        cur = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(cur << (8 - nbits)));
  return out;
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void consider(const std::vector<int>& vert_at) {
    std::string cert = cert_from_order(g, vert_at);
    if (!have_best || cert < best) {
      best = std::move(cert);
      have_best = true;
    }
  }

  // refine colouring to an equitable partition with canonical class ids
  void refine(std::vector<int>& color) const {
    const int n = g.n;
    for (;;) {
      int k = 0;
      for (int v = 0; v < n; ++v) k = std::max(k, color[v] + 1);
      std::vector<std::uint64_t> cellmask(k, 0);
      for (int v = 0; v < n; ++v) cellmask[color[v]] |= vbit(v);
      std::vector<std::vector<int>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].reserve(k + 1);
        sig[v].push_back(color[v]);
        for (int c = 0; c < k; ++c) sig[v].push_back(popcount(g.adj[v] & cellmask[c]));
      }
      std::vector<std::vector<int>> keys = sig;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      std::vector<int> newcolor(n);
      for (int v = 0; v < n; ++v)
        newcolor[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
      if (newcolor == color) return;
      color = std::move(newcolor);
    }
  }

  bool homogeneous(const std::vector<int>& color, const std::vector<std::vector<int>>& cells) const {
    std::vector<std::uint64_t> cellmask(cells.size(), 0);
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cellmask[c] |= vbit(v);
    for (size_t a = 0; a < cells.size(); ++a) {
      for (size_t b = a; b < cells.size(); ++b) {
        const int full = (a == b) ? static_cast<int>(cells[a].size()) - 1 : static_cast<int>(cells[b].size());
        bool all_full = true, all_empty = true;
        for (int v : cells[a]) {
          int d = popcount(g.adj[v] & cellmask[b]);
          if (d != 0) all_empty = false;
          if (d != full) all_full = false;
        }
        if (!all_full && !all_empty) return false;
      }
    }
    (void)color;
    return true;
  }

  void search(std::vector<int> color) {
    refine(color);
    const int n = g.n;
    int k = 0;
    for (int v = 0; v < n; ++v) k = std::max(k, color[v] + 1);
    std::vector<std::vector<int>> cells(k);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    int target = -1;
    size_t target_size = static_cast<size_t>(n) + 1;
    for (int c = 0; c < k; ++c)
      if (cells[c].size() > 1 && cells[c].size() < target_size) {
        target = c;
        target_size = cells[c].size();
      }

    if (target < 0 || homogeneous(color, cells)) {
      std::vector<int> vert_at;
      vert_at.reserve(n);
      for (const auto& cell : cells)
        for (int v : cell) vert_at.push_back(v);
      consider(vert_at);
      return;
    }

    for (int v : cells[target]) {
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u) {
        child[u] = color[u];
        if (color[u] > color[v] || (color[u] == color[v] && u != v)) child[u]++;
      }
      search(std::move(child));
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
  if (g.n > kMaxVertices) throw std::invalid_argument("canonical_key: order exceeds capacity");
  CanonSearch s(g);
  s.search(std::vector<int>(g.n, 0));
  return CanonicalKey{std::move(s.best)};
}

CanonicalKey canonical_key_bruteforce(const Graph& g) {
  if (g.n > 9) throw std::invalid_argument("canonical_key_bruteforce supports n <= 9 only");
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool have = false;
  do {
    std::string cert = cert_from_order(g, perm);
    if (!have || cert < best) {
      best = cert;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) best = cert_from_order(g, perm);  // n == 0
  return CanonicalKey{best};
}

Graph graph_from_key(const CanonicalKey& key) {
  if (key.bytes.empty()) throw std::invalid_argument("empty canonical key");
  const int n = static_cast<unsigned char>(key.bytes[0]);
  Graph g(n);
  size_t bitpos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      size_t byte = 1 + bitpos / 8, off = 7 - bitpos % 8;
      if (byte >= key.bytes.size()) throw std::invalid_argument("truncated canonical key");
      if ((static_cast<unsigned char>(key.bytes[byte]) >> off) & 1) g.add_edge(i, j);
      ++bitpos;
    }
  return g;
}

// --------------------------- graph6 (short form) ---------------------------

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  for (char ch : s)
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: character out of range");
  if (s[0] == 126) throw std::invalid_argument("graph6: long form (n >= 63) not supported");
  const int n = s[0] - 63;
  const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t expect = 1 + (nbits + 5) / 6;
  if (s.size() != expect) throw std::invalid_argument("graph6: wrong length for stated order");
  Graph g(n);
  size_t bitpos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const unsigned group = static_cast<unsigned>(s[1 + bitpos / 6] - 63);
      if ((group >> (5 - bitpos % 6)) & 1) g.add_edge(i, j);
      ++bitpos;
    }
  // padding bits must be zero for bit-exact compliance
  if (nbits % 6) {
    const unsigned group = static_cast<unsigned>(s.back() - 63);
    const unsigned pad = group & ((1u << (6 - nbits % 6)) - 1);
    if (pad != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6 short form supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + g.n));
  unsigned cur = 0;
  int nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(63 + (cur << (6 - nbits))));
  return out;
}

}  // namespace relcop
