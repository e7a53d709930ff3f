#include "relcop/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace relcop {

namespace {

[[noreturn]] void bad_spec(const std::string& why) { throw std::invalid_argument("family spec: " + why); }

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad_spec("expected TAG:p1[,p2[,p3]] in '" + text + "'");
  std::string tag = text.substr(0, colon);
  for (char& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::vector<int> params;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      bad_spec("non-integer parameter '" + item + "'");
    }
    if (pos != item.size()) bad_spec("non-integer parameter '" + item + "'");
    params.push_back(v);
  }
  auto arity = [&](size_t k) {
    if (params.size() != k) bad_spec("tag " + tag + " takes " + std::to_string(k) + " parameter(s)");
  };
  FamilySpec s{};
  if (tag == "C") {
    s.tag = Tag::Cycle;
    arity(1);
  } else if (tag == "STAR") {
    s.tag = Tag::Star;
    arity(1);
  } else if (tag == "U") {
    s.tag = Tag::U;
    arity(1);
  } else if (tag == "A") {
    s.tag = Tag::A;
    arity(1);
  } else if (tag == "B") {
    s.tag = Tag::B;
    arity(1);
  } else if (tag == "F") {
    s.tag = Tag::F;
    arity(2);
  } else if (tag == "G1") {
    s.tag = Tag::G1;
    arity(2);
  } else if (tag == "G2") {
    s.tag = Tag::G2;
    arity(3);
  } else if (tag == "G3") {
    s.tag = Tag::G3;
    arity(3);
  } else if (tag == "H") {
    s.tag = Tag::H;
    arity(2);
  } else {
    bad_spec("unknown tag '" + tag + "'");
  }
  s.p1 = params.size() > 0 ? params[0] : 0;
  s.p2 = params.size() > 1 ? params[1] : 0;
  s.p3 = params.size() > 2 ? params[2] : 0;
  return s;
}

std::string FamilySpec::to_string() const {
  auto one = [&](const char* t) { return std::string(t) + ":" + std::to_string(p1); };
  auto two = [&](const char* t) { return one(t) + "," + std::to_string(p2); };
  auto three = [&](const char* t) { return two(t) + "," + std::to_string(p3); };
  switch (tag) {
    case Tag::Cycle: return one("C");
    case Tag::Star: return one("STAR");
    case Tag::U: return one("U");
    case Tag::A: return one("A");
    case Tag::B: return one("B");
    case Tag::F: return two("F");
    case Tag::G1: return two("G1");
    case Tag::G2: return three("G2");
    case Tag::G3: return three("G3");
    case Tag::H: return two("H");
  }
  return "?";
}

namespace {

Graph build_cycle(int n) {
  if (n < 3) bad_spec("C:n needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph build_star(int n) {
  if (n < 2) bad_spec("STAR:n needs n >= 2");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// U_n = (K_2 u (n-3)K_1) v K_1: hub 0, adjacent pair {1,2}, leaves 3..n-1.
Graph build_u(int n) {
  if (n < 5) bad_spec("U:n needs n >= 5");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  return g;
}

// A_n = C_(n-1) with one pendant leaf.
Graph build_a(int n) {
  if (n < 5) bad_spec("A:n needs n >= 5");
  Graph g(n);
  for (int i = 0; i < n - 1; ++i) g.add_edge(i, (i + 1) % (n - 1));
  g.add_edge(0, n - 1);
  return g;
}

// B_n = U_(n-1) plus a vertex joined to the universal vertex and to one
// vertex of degree 2 (one fixed triangle vertex; the two choices are
// isomorphic). Hub 0, pair {1,2}, leaves 3..n-2, apex n-1 ~ {0,1}.
Graph build_b(int n) {
  if (n < 5) bad_spec("B:n needs n >= 5");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  g.add_edge(1, n - 1);
  return g;
}

// F(n1, n2): hub 0, two triangles {0,1,2} and {0,3,4}, n1 pendant leaves,
// n2 subdivided pendant paths (hub - mid - end). Order n1 + 2 n2 + 5.
Graph build_f(int n1, int n2) {
  if (n1 < 0 || n2 < 0) bad_spec("F:n1,n2 needs n1, n2 >= 0");
  const int n = n1 + 2 * n2 + 5;
  if (n > kMaxVertices) bad_spec("F order exceeds capacity");
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  int next = 5;
  for (int i = 0; i < n1; ++i) g.add_edge(0, next++);
  for (int i = 0; i < n2; ++i) {
    const int mid = next++, end = next++;
    g.add_edge(0, mid);
    g.add_edge(mid, end);
  }
  return g;
}

// G1(a,b): cycles C_a and C_b sharing exactly one vertex (vertex 0).
Graph build_g1(int a, int b) {
  if (a < 3 || b < 3) bad_spec("G1:a,b needs a, b >= 3");
  const int n = a + b - 1;
  if (n > kMaxVertices) bad_spec("G1 order exceeds capacity");
  Graph g(n);
  for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
  // second cycle: 0, a, a+1, ..., a+b-2
  g.add_edge(0, a);
  for (int i = 0; i + 1 < b - 1; ++i) g.add_edge(a + i, a + i + 1);
  g.add_edge(a + b - 2, 0);
  return g;
}

// G2(a,b,c): C_a and C_b joined by a path with c vertices whose end vertices
// are identified with one vertex of each cycle (c >= 2).
Graph build_g2(int a, int b, int c) {
  if (a < 3 || b < 3) bad_spec("G2:a,b,c needs a, b >= 3");
  if (c < 2) bad_spec("G2:a,b,c needs c >= 2");
  const int n = a + b + c - 2;
  if (n > kMaxVertices) bad_spec("G2 order exceeds capacity");
  Graph g(n);
  for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
  // path from cycle-a vertex 0 through c-2 interior vertices to cycle-b anchor
  int prev = 0;
  int next = a;
  for (int i = 0; i < c - 2; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  const int anchor = next;  // first vertex of C_b
  g.add_edge(prev, anchor);
  for (int i = 0; i + 1 < b; ++i) g.add_edge(anchor + i, anchor + i + 1);
  g.add_edge(anchor + b - 1, anchor);
  return g;
}

// G3(a,b,c): two hub vertices joined by three internally disjoint paths with
// a, b, c internal vertices (a+b+c = n-2); at most one parameter is 0.
Graph build_g3(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) bad_spec("G3:a,b,c needs a, b, c >= 0");
  if ((a == 0) + (b == 0) + (c == 0) > 1) bad_spec("G3:a,b,c allows at most one zero parameter");
  const int n = a + b + c + 2;
  if (n > kMaxVertices) bad_spec("G3 order exceeds capacity");
  Graph g(n);
  const int u = 0, w = 1;
  int next = 2;
  for (int len : {a, b, c}) {
    if (len == 0) {
      g.add_edge(u, w);
      continue;
    }
    int prev = u;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, w);
  }
  return g;
}

// H(n,m): hub 0 universal; v = 1 additionally adjacent to the m leaves
// 2..m+1. H(n,0) is the star, H(n,1) ~ U_n, H(n,2) ~ B_n.
Graph build_h(int n, int m) {
  if (n < 2) bad_spec("H:n,m needs n >= 2");
  if (m < 0 || m > n - 2) bad_spec("H:n,m needs 0 <= m <= n-2");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  for (int i = 0; i < m; ++i) g.add_edge(1, 2 + i);
  return g;
}

}  // namespace

Graph build(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilySpec::Tag::Cycle: return build_cycle(spec.p1);
    case FamilySpec::Tag::Star: return build_star(spec.p1);
    case FamilySpec::Tag::U: return build_u(spec.p1);
    case FamilySpec::Tag::A: return build_a(spec.p1);
    case FamilySpec::Tag::B: return build_b(spec.p1);
    case FamilySpec::Tag::F: return build_f(spec.p1, spec.p2);
    case FamilySpec::Tag::G1: return build_g1(spec.p1, spec.p2);
    case FamilySpec::Tag::G2: return build_g2(spec.p1, spec.p2, spec.p3);
    case FamilySpec::Tag::G3: return build_g3(spec.p1, spec.p2, spec.p3);
    case FamilySpec::Tag::H: return build_h(spec.p1, spec.p2);
  }
  bad_spec("unreachable");
}

namespace {

CoeffPoly cw_u(int n) {
  // n x + n x^2 + sum_{k=3..n} C(n-1, k-1) x^k
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[1] = n;
  c[2] = n;
  for (int k = 3; k <= n; ++k) c[k] = binomial(n - 1, k - 1);
  return CoeffPoly(std::move(c));
}

CoeffPoly cw_cycle(int n) {
  std::vector<BigInt> c(n, BigInt(0));
  for (int k = 1; k <= n - 1; ++k) c[k] = n;
  return CoeffPoly(std::move(c));
}

CoeffPoly cw_a(int n) {
  // n x + sum_{k=2..n-2} (n+k-2) x^k + (n-1) x^(n-1)   [paper form]
  std::vector<BigInt> c(n, BigInt(0));
  c[1] = n;
  for (int k = 2; k <= n - 2; ++k) c[k] = n + k - 2;
  c[n - 1] = n - 1;
  return CoeffPoly(std::move(c));
}

CoeffPoly cw_b(int n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[1] = n;
  c[2] = n + 1;
  c[3] = binomial(n - 1, 2) + 1;
  for (int k = 4; k <= n; ++k) c[k] = binomial(n - 1, k - 1);
  return CoeffPoly(std::move(c));
}

CoeffPoly cw_f(int n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[1] = n;
  c[2] = n + 1;
  for (int k = 3; k <= n; ++k) c[k] = binomial(n - 1, k - 1);
  return CoeffPoly(std::move(c));
}

int closed_form_order(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilySpec::Tag::U:
    case FamilySpec::Tag::Cycle:
    case FamilySpec::Tag::A:
    case FamilySpec::Tag::B: return spec.p1;
    case FamilySpec::Tag::F:
      if (spec.p2 != 0) bad_spec("closed form only covers F(n-5, 0)");
      return spec.p1 + 5;
    default: bad_spec("closed form supports U, C, A, B, F(n-5,0) only");
  }
}

}  // namespace

CoeffPoly closed_form_cw(const FamilySpec& spec) {
  const int n = closed_form_order(spec);
  if (n < 5) bad_spec("closed forms require n >= 5");
  switch (spec.tag) {
    case FamilySpec::Tag::U: return cw_u(n);
    case FamilySpec::Tag::Cycle: return cw_cycle(n);
    case FamilySpec::Tag::A: return cw_a(n);
    case FamilySpec::Tag::B: return cw_b(n);
    case FamilySpec::Tag::F: return cw_f(n);
    default: bad_spec("unreachable");
  }
}

CoeffPoly closed_form_cs(const FamilySpec& spec) {
  const int n = closed_form_order(spec);
  if (n < 5) bad_spec("closed forms require n >= 5");
  CoeffPoly cw = closed_form_cw(spec);
  std::vector<BigInt> c = cw.c;
  c.resize(n + 1, BigInt(0));
  switch (spec.tag) {
    case FamilySpec::Tag::Cycle: c[n] += 1; break;
    case FamilySpec::Tag::A:
      c[n - 1] += 1;  // paper form; enumeration disagrees at this coefficient
      c[n] += 1;
      break;
    default: break;  // chordal families: CS == CW
  }
  return CoeffPoly(std::move(c));
}

namespace {

// strip degree-<=1 vertices repeatedly; returns surviving vertex mask
VertexSet two_core_mask(const Graph& g) {
  std::uint64_t cur = g.full_set();
  bool changed = true;
  while (changed) {
    changed = false;
    std::uint64_t vs = cur;
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      if (std::popcount(g.adj[v] & cur) <= 1) {
        cur &= ~vbit(v);
        changed = true;
      }
    }
  }
  return cur;
}

}  // namespace

BicyclicType classify_bicyclic(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.n + 1)
    throw std::invalid_argument("classify_bicyclic: input is not bicyclic");

  const std::uint64_t core = two_core_mask(g);
  std::vector<int> branch;
  std::uint64_t vs = core;
  while (vs) {
    const int v = std::countr_zero(vs);
    vs &= vs - 1;
    if (std::popcount(g.adj[v] & core) >= 3) branch.push_back(v);
  }

  BicyclicType result;
  if (branch.size() == 1) {
    // two cycles through the degree-4 vertex
    const int w = branch[0];
    const Graph k = induced_subgraph(g, core & ~vbit(w));
    const auto comps = components(k);
    if (comps.size() != 2) throw std::logic_error("classify_bicyclic: unexpected Type 1 core");
    int a = std::popcount(comps[0]) + 1;
    int b = std::popcount(comps[1]) + 1;
    if (a > b) std::swap(a, b);
    result.kind = 1;
    result.params = {a, b, 0};
    return result;
  }
  if (branch.size() != 2) throw std::logic_error("classify_bicyclic: unexpected branch vertex count");

  const int u = branch[0], w = branch[1];
  const std::uint64_t rest = core & ~vbit(u) & ~vbit(w);
  const Graph k = induced_subgraph(g, core);
  // components of core minus both branch vertices, with attachment info
  struct Part {
    int size;
    bool touch_u, touch_w;
  };
  std::vector<Part> parts;
  {
    // build component masks inside `rest` using g's adjacency
    std::uint64_t remaining = rest;
    while (remaining) {
      std::uint64_t reach = remaining & (~remaining + 1);
      std::uint64_t frontier = reach;
      while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
          const int v = std::countr_zero(f);
          f &= f - 1;
          next |= g.adj[v] & rest;
        }
        frontier = next & ~reach;
        reach |= frontier;
      }
      std::uint64_t closure = 0;
      std::uint64_t f = reach;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        closure |= g.adj[v];
      }
      parts.push_back({std::popcount(reach), (closure & vbit(u)) != 0, (closure & vbit(w)) != 0});
      remaining &= ~reach;
    }
  }
  const bool direct_edge = g.has_edge(u, w);
  const bool all_span = std::all_of(parts.begin(), parts.end(), [](const Part& p) { return p.touch_u && p.touch_w; });

  if (all_span && parts.size() + (direct_edge ? 1 : 0) == 3) {
    std::array<int, 3> ps{0, 0, 0};
    size_t i = direct_edge ? 1 : 0;
    for (const Part& p : parts) ps[i++] = p.size;
    std::sort(ps.begin(), ps.end());
    result.kind = 3;
    result.params = ps;
  } else {
    int a = -1, b = -1, c = -1;
    for (const Part& p : parts) {
      if (p.touch_u && p.touch_w)
        c = p.size + 2;
      else if (p.touch_u)
        a = p.size + 1;
      else if (p.touch_w)
        b = p.size + 1;
    }
    if (direct_edge) c = 2;
    if (a < 3 || b < 3 || c < 2) throw std::logic_error("classify_bicyclic: unexpected Type 2 core");
    if (a > b) std::swap(a, b);
    result.kind = 2;
    result.params = {a, b, c};
  }

  // self-check: the classified base must be isomorphic to the 2-core
  FamilySpec base{};
  if (result.kind == 3) {
    base.tag = FamilySpec::Tag::G3;
    base.p1 = result.params[0];
    base.p2 = result.params[1];
    base.p3 = result.params[2];
  } else {
    base.tag = FamilySpec::Tag::G2;
    base.p1 = result.params[0];
    base.p2 = result.params[1];
    base.p3 = result.params[2];
  }
  if (result.kind == 1) {
    base.tag = FamilySpec::Tag::G1;
    base.p1 = result.params[0];
    base.p2 = result.params[1];
    base.p3 = 0;
  }
  if (!(canonical_key(build(base)) == canonical_key(k)))
    throw std::logic_error("classify_bicyclic: base reconstruction mismatch");
  return result;
}

long long count_cut_sets(const Graph& g, int k) {
  if (!is_connected(g) || g.n == 0) throw std::invalid_argument("count_cut_sets: input must be connected");
  if (k < 1 || k >= g.n) throw std::invalid_argument("count_cut_sets: need 1 <= k < n");
  long long count = 0;
  // iterate k-subsets via combination masks
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t removed = 0;
    for (int i : pick) removed |= vbit(i);
    if (!is_connected_subset(g, g.full_set() & ~removed)) ++count;
    int i = k - 1;
    while (i >= 0 && pick[i] == g.n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

}  // namespace relcop
