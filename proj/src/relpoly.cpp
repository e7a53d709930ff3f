#include "relcop/relpoly.hpp"

#include <bit>
#include <stdexcept>

#include "relcop/copwin.hpp"

namespace relcop {

namespace {

constexpr int kEnumLimit = 24;

void check_enum_bound(int n, const char* what) {
  if (n > kEnumLimit) throw std::invalid_argument(std::string(what) + ": direct enumeration limited to n <= 24");
}

std::vector<BigInt> lift_counts(const std::vector<long long>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

std::string measure_name(ReliabilityMeasure m) {
  switch (m) {
    case ReliabilityMeasure::NodeConnected: return "nrel";
    case ReliabilityMeasure::NodeCopwin: return "ncrel";
    case ReliabilityMeasure::EdgeCopwin: return "ecrel";
  }
  return "?";
}

ReliabilityMeasure measure_from_name(const std::string& s) {
  if (s == "nrel") return ReliabilityMeasure::NodeConnected;
  if (s == "ncrel") return ReliabilityMeasure::NodeCopwin;
  if (s == "ecrel") return ReliabilityMeasure::EdgeCopwin;
  throw std::invalid_argument("unknown measure '" + s + "' (expected nrel | ncrel | ecrel)");
}

std::vector<BigInt> connected_set_counts(const Graph& g) {
  check_enum_bound(g.n, "connected_set_counts");
  std::vector<long long> counts(g.n, 0);
  const std::uint64_t all = g.full_set();
  for (std::uint64_t s = 1; s <= all && all; ++s) {
    if (is_connected_subset(g, s)) counts[std::popcount(s) - 1]++;
    if (s == all) break;
  }
  return lift_counts(counts);
}

std::vector<BigInt> copwin_set_counts(const Graph& g) {
  check_enum_bound(g.n, "copwin_set_counts");
  std::vector<long long> counts(g.n, 0);
  const std::uint64_t all = g.full_set();
  for (std::uint64_t s = 1; s <= all && all; ++s) {
    if (is_copwin_subset(g, s)) counts[std::popcount(s) - 1]++;
    if (s == all) break;
  }
  return lift_counts(counts);
}

std::vector<BigInt> edge_copwin_counts(const Graph& g) {
  const auto edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  if (m > kEnumLimit) throw std::invalid_argument("edge_copwin_counts: 2^m enumeration limited to m <= 24");
  std::vector<long long> counts(m + 1, 0);
  const std::uint64_t lim = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
  for (std::uint64_t s = 0;; ++s) {
    Graph h(g.n);
    for (int e = 0; e < m; ++e)
      if ((s >> e) & 1) h.add_edge(edge_list[e].first, edge_list[e].second);
    if (is_copwin(h)) counts[std::popcount(s)]++;
    if (s == lim) break;
  }
  return lift_counts(counts);
}

namespace {

CoeffPoly poly_from_counts(const std::vector<BigInt>& counts) {
  std::vector<BigInt> c(counts.size() + 1, BigInt(0));
  for (size_t i = 0; i < counts.size(); ++i) c[i + 1] = counts[i];
  return CoeffPoly(std::move(c));
}

}  // namespace

CoeffPoly cs_poly(const Graph& g) { return poly_from_counts(connected_set_counts(g)); }
CoeffPoly cw_poly(const Graph& g) { return poly_from_counts(copwin_set_counts(g)); }

namespace {

// CS of a connected graph via pivoting; disconnected graphs are decomposed by
// the caller. Pivot on a leaf when one exists (then G-v = G/v and only two
// distinct children remain), else on a minimum-degree vertex.
CoeffPoly cs_pivot_rec(const Graph& g, PivotCache& cache) {
  if (g.n == 0) return CoeffPoly::zero();
  if (g.n == 1) return CoeffPoly::x();

  const CanonicalKey key = canonical_key(g);
  if (auto it = cache.find(key.bytes); it != cache.end()) return it->second;

  CoeffPoly total = CoeffPoly::zero();
  const auto comps = components(g);
  if (comps.size() > 1) {
    for (VertexSet comp : comps) total = total + cs_pivot_rec(induced_subgraph(g, comp), cache);
  } else {
    int v = 0, best_deg = g.n + 1;
    for (int u = 0; u < g.n; ++u) {
      const int d = g.degree(u);
      if (d < best_deg) {
        best_deg = d;
        v = u;
      }
      if (best_deg == 1) break;
    }
    const CoeffPoly minus_v = cs_pivot_rec(delete_vertex(g, v), cache);
    const CoeffPoly contracted = (best_deg <= 1) ? minus_v : cs_pivot_rec(contract_close(g, v), cache);
    const CoeffPoly minus_nbhd = cs_pivot_rec(delete_closed_neighborhood(g, v), cache);
    const CoeffPoly inner = contracted - minus_nbhd + CoeffPoly::constant(BigInt(1));
    total = minus_v + shift_up(inner, 1);
  }
  cache.emplace(key.bytes, total);
  return total;
}

}  // namespace

CoeffPoly cs_poly_pivot(const Graph& g, PivotCache& cache) { return cs_pivot_rec(g, cache); }

CoeffPoly cs_poly_pivot(const Graph& g) {
  PivotCache cache;
  return cs_pivot_rec(g, cache);
}

namespace {

BigRat nrel_pivot_rec(const Graph& g, const BigRat& p, const BigRat& q,
                      std::unordered_map<std::string, BigRat>& memo) {
  if (g.n == 0) return BigRat(0);
  if (g.n == 1) return p;
  const CanonicalKey key = canonical_key(g);
  if (auto it = memo.find(key.bytes); it != memo.end()) return it->second;

  int v = 0, best_deg = g.n + 1;
  for (int u = 0; u < g.n; ++u) {
    const int d = g.degree(u);
    if (d < best_deg) {
      best_deg = d;
      v = u;
    }
    if (best_deg == 1) break;
  }
  const BigRat r_minus_v = nrel_pivot_rec(delete_vertex(g, v), p, q, memo);
  const BigRat r_contract = (best_deg <= 1) ? r_minus_v : nrel_pivot_rec(contract_close(g, v), p, q, memo);
  const BigRat r_nbhd = nrel_pivot_rec(delete_closed_neighborhood(g, v), p, q, memo);

  BigRat qdeg(1);
  for (int i = 0; i < best_deg; ++i) qdeg *= q;
  BigRat qn1(1);
  for (int i = 0; i < g.n - 1; ++i) qn1 *= q;

  // NRel(G) = (1-p)NRel(G-v) + p NRel(G/v) - p(1-p)^deg(v) NRel(G-N[v])
  //           + p(1-p)^(n-1)
  // (the last term accounts for v operational alone, which G/v cannot count)
  BigRat val = q * r_minus_v + p * r_contract - p * qdeg * r_nbhd + p * qn1;
  memo.emplace(key.bytes, val);
  return val;
}

}  // namespace

BigRat nrel_pivot(const Graph& g, const BigRat& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("nrel_pivot: p must lie in [0,1]");
  std::unordered_map<std::string, BigRat> memo;
  const BigRat q = BigRat(1) - p;
  return nrel_pivot_rec(g, p, q, memo);
}

BigRat reliability_eval(const Graph& g, ReliabilityMeasure m, const BigRat& p) {
  std::vector<BigInt> counts;
  int N;
  if (m == ReliabilityMeasure::EdgeCopwin) {
    counts = edge_copwin_counts(g);
    N = g.edge_count();
  } else {
    counts = (m == ReliabilityMeasure::NodeConnected) ? connected_set_counts(g) : copwin_set_counts(g);
    N = g.n;
  }
  const BigRat q = BigRat(1) - p;
  BigRat total(0);
  const bool with_zero = (m == ReliabilityMeasure::EdgeCopwin);
  for (size_t idx = 0; idx < counts.size(); ++idx) {
    const int i = with_zero ? static_cast<int>(idx) : static_cast<int>(idx) + 1;
    BigRat term(counts[idx]);
    for (int k = 0; k < i; ++k) term *= p;
    for (int k = 0; k < N - i; ++k) term *= q;
    total += term;
  }
  return total;
}

CoeffPoly reliability_from_counts(const std::vector<BigInt>& counts, int N, bool with_zero) {
  // result_k = sum_i C_i (-1)^(k-i) binom(N-i, k-i)
  std::vector<BigInt> out(N + 1, BigInt(0));
  for (size_t idx = 0; idx < counts.size(); ++idx) {
    const int i = with_zero ? static_cast<int>(idx) : static_cast<int>(idx) + 1;
    if (counts[idx] == 0) continue;
    for (int k = i; k <= N; ++k) {
      BigInt term = counts[idx] * binomial(N - i, k - i);
      if ((k - i) % 2) term = -term;
      out[k] += term;
    }
  }
  return CoeffPoly(std::move(out));
}

CoeffPoly reliability_poly(const Graph& g, ReliabilityMeasure m) {
  if (m == ReliabilityMeasure::EdgeCopwin)
    return reliability_from_counts(edge_copwin_counts(g), g.edge_count(), /*with_zero=*/true);
  const auto counts = (m == ReliabilityMeasure::NodeConnected) ? connected_set_counts(g) : copwin_set_counts(g);
  return reliability_from_counts(counts, g.n, /*with_zero=*/false);
}

bool mobius_bridge(const std::vector<BigInt>& copwin_counts) {
  // Expand sum_i W_i p^i (1-p)^(n-i) by explicit polynomial products (a code
  // path independent of reliability_from_counts) and compare.
  const int n = static_cast<int>(copwin_counts.size());
  CoeffPoly one_minus_p(std::vector<BigInt>{BigInt(1), BigInt(-1)});
  CoeffPoly lhs = CoeffPoly::zero();
  for (int i = 1; i <= n; ++i) {
    if (copwin_counts[i - 1] == 0) continue;
    CoeffPoly term = CoeffPoly::constant(copwin_counts[i - 1]);
    term = shift_up(term, i);
    for (int k = 0; k < n - i; ++k) term = term * one_minus_p;
    lhs = lhs + term;
  }
  const CoeffPoly rhs = reliability_from_counts(copwin_counts, n, /*with_zero=*/false);
  return lhs == rhs;
}

bool coeff_dominates(const CoeffPoly& a, const CoeffPoly& b) {
  if (b.degree() > a.degree()) return false;
  for (int k = 0; k <= b.degree(); ++k)
    if (b.coeff(k) > a.coeff(k)) return false;
  return true;
}

}  // namespace relcop
