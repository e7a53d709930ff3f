#include "relcop/copwin.hpp"

#include <bit>
#include <stdexcept>

namespace relcop {

namespace {

// u is dominated inside `cur` when N[u] & cur is contained in N[v] & cur for
// some other surviving v.
int find_dominated(const Graph& g, std::uint64_t cur) {
  std::uint64_t us = cur;
  while (us) {
    const int u = std::countr_zero(us);
    us &= us - 1;
    const std::uint64_t nu = (g.adj[u] | vbit(u)) & cur;
    std::uint64_t vs = cur & ~vbit(u);
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      const std::uint64_t nv = (g.adj[v] | vbit(v)) & cur;
      if ((nu & ~nv) == 0) return u;
    }
  }
  return -1;
}

}  // namespace

bool is_copwin_subset(const Graph& g, VertexSet s) {
  std::uint64_t cur = s & g.full_set();
  if (cur == 0) return false;
  if (!is_connected_subset(g, cur)) return false;
  while (std::popcount(cur) > 1) {
    const int u = find_dominated(g, cur);
    if (u < 0) return false;
    cur &= ~vbit(u);
  }
  return true;
}

DismantleTrace dismantle(const Graph& g) {
  DismantleTrace t;
  std::uint64_t cur = g.full_set();
  if (cur == 0 || !is_connected(g)) return t;
  while (std::popcount(cur) > 1) {
    const int u = find_dominated(g, cur);
    if (u < 0) return t;
    t.order.push_back(u);
    cur &= ~vbit(u);
  }
  t.success = true;
  return t;
}

bool is_copwin(const Graph& g) { return dismantle(g).success; }

bool is_copwin_game(const Graph& g) {
  if (g.n > 12) throw std::invalid_argument("is_copwin_game: order exceeds oracle bound (n <= 12)");
  const int n = g.n;
  if (n == 0) return false;
  if (n == 1) return true;

  // positions (c, r, turn): turn 0 = cop to move, 1 = robber to move.
  // Least fixpoint of cop-winning positions (finite-horizon capture).
  auto idx = [n](int c, int r, int t) { return (c * n + r) * 2 + t; };
  std::vector<char> win(static_cast<size_t>(n) * n * 2, 0);
  for (int v = 0; v < n; ++v) {
    win[idx(v, v, 0)] = 1;
    win[idx(v, v, 1)] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) {
        if (c == r) continue;
        if (!win[idx(c, r, 0)]) {
          // cop moves within N[c]
          std::uint64_t moves = g.adj[c] | vbit(c);
          bool w = false;
          while (moves && !w) {
            const int c2 = std::countr_zero(moves);
            moves &= moves - 1;
            if (c2 == r || win[idx(c2, r, 1)]) w = true;
          }
          if (w) {
            win[idx(c, r, 0)] = 1;
            changed = true;
          }
        }
        if (!win[idx(c, r, 1)]) {
          // robber moves within N[r]; cop wins if every move loses
          std::uint64_t moves = g.adj[r] | vbit(r);
          bool all = true;
          while (moves && all) {
            const int r2 = std::countr_zero(moves);
            moves &= moves - 1;
            if (r2 != c && !win[idx(c, r2, 0)]) all = false;
          }
          if (all) {
            win[idx(c, r, 1)] = 1;
            changed = true;
          }
        }
      }
  }
  for (int c = 0; c < n; ++c) {
    bool all = true;
    for (int r = 0; r < n && all; ++r)
      if (r != c && !win[idx(c, r, 0)]) all = false;
    if (all) return true;
  }
  return false;
}

bool is_chordal(const Graph& g) {
  std::uint64_t cur = g.full_set();
  while (std::popcount(cur) > 1) {
    int simplicial = -1;
    std::uint64_t us = cur;
    while (us && simplicial < 0) {
      const int u = std::countr_zero(us);
      us &= us - 1;
      const std::uint64_t nb = g.adj[u] & cur;
      bool clique = true;
      std::uint64_t ws = nb;
      while (ws && clique) {
        const int w = std::countr_zero(ws);
        ws &= ws - 1;
        if ((nb & ~vbit(w) & ~g.adj[w]) != 0) clique = false;
      }
      if (clique) simplicial = u;
    }
    if (simplicial < 0) return false;
    cur &= ~vbit(simplicial);
  }
  return true;
}

bool has_long_induced_cycle(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("has_long_induced_cycle: brute-force scan limited to n <= 24");
  const std::uint64_t all = g.full_set();
  for (std::uint64_t s = 0; s <= all; ++s) {
    if (std::popcount(s) < 4) {
      if (s == all) break;
      continue;
    }
    bool two_regular = true;
    std::uint64_t vs = s;
    while (vs && two_regular) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      if (std::popcount(g.adj[v] & s) != 2) two_regular = false;
    }
    if (two_regular && is_connected_subset(g, s)) return true;
    if (s == all) break;
  }
  return false;
}

}  // namespace relcop
