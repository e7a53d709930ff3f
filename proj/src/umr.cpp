#include "relcop/umr.hpp"

#include <algorithm>
#include <stdexcept>

#include "relcop/families.hpp"
#include "relcop/parallel.hpp"

namespace relcop {

RatPoly::RatPoly(const CoeffPoly& p) {
  c.reserve(p.c.size());
  for (const auto& x : p.c) c.emplace_back(x);
  normalize();
}

void RatPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

namespace {

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * BigRat(static_cast<long>(i));
  r.normalize();
  return r;
}

// remainder of a by b (b nonzero), rational arithmetic
RatPoly rat_rem(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const BigRat factor = r.c.back() / b.c.back();
    const int shift = r.degree() - db;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= factor * b.c[i];
    r.c.pop_back();
    r.normalize();
  }
  return r;
}

RatPoly rat_quot(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  const int db = b.degree();
  std::vector<BigRat> q(std::max(0, a.degree() - db + 1), BigRat(0));
  while (!r.is_zero() && r.degree() >= db) {
    const BigRat factor = r.c.back() / b.c.back();
    const int shift = r.degree() - db;
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= factor * b.c[i];
    r.c.pop_back();
    r.normalize();
  }
  return RatPoly(std::move(q));
}

RatPoly rat_monic(RatPoly p) {
  if (p.is_zero()) return p;
  const BigRat lead = p.c.back();
  for (auto& x : p.c) x /= lead;
  return p;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rat_monic(std::move(a));
}

// clear denominators and divide by content; positive scaling, sign preserved
CoeffPoly primitive_int(const RatPoly& p) {
  if (p.is_zero()) return CoeffPoly::zero();
  BigInt lcm_den(1);
  for (const auto& q : p.c) {
    BigInt d(q.get_den());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    lcm_den = lcm_den / g * d;
  }
  std::vector<BigInt> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    BigRat scaled = p.c[i] * BigRat(lcm_den);
    c[i] = BigInt(scaled.get_num());
  }
  BigInt content(0);
  for (const auto& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1)
    for (auto& x : c) x /= content;
  return CoeffPoly(std::move(c));
}

CoeffPoly squarefree_part(const CoeffPoly& p) {
  if (p.is_zero()) return p;
  RatPoly rp(p);
  const RatPoly g = rat_gcd(rp, rat_derivative(rp));
  if (g.degree() <= 0) return primitive_int(rp);
  return primitive_int(rat_quot(rp, g));
}

// Sturm chain of a squarefree integer polynomial; each element stored as a
// primitive integer polynomial (positive scaling preserves signs).
std::vector<CoeffPoly> sturm_chain(const CoeffPoly& f) {
  std::vector<CoeffPoly> chain;
  chain.push_back(f);
  CoeffPoly d = derivative(f);
  if (!d.is_zero()) chain.push_back(d);
  while (chain.back().degree() > 0) {
    RatPoly r = rat_rem(RatPoly(chain[chain.size() - 2]), RatPoly(chain.back()));
    if (r.is_zero()) break;
    for (auto& x : r.c) x = -x;
    chain.push_back(primitive_int(r));
  }
  return chain;
}

int sign_variations(const std::vector<int>& signs) {
  int var = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at(const std::vector<CoeffPoly>& chain, const BigRat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return sign_variations(signs);
}

int variations_at_infinity(const std::vector<CoeffPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_pos_infinity(p));
  return sign_variations(signs);
}

// exact division of p by (x - r), r a known rational root
RatPoly deflate_root(const RatPoly& p, const BigRat& r) {
  std::vector<BigRat> q(p.c.size() - 1, BigRat(0));
  BigRat carry = p.c.back();
  for (int i = static_cast<int>(p.c.size()) - 2; i >= 0; --i) {
    q[i] = carry;
    carry = p.c[i] + carry * r;
  }
  return RatPoly(std::move(q));
}

int root_count_impl(CoeffPoly sf, const BigRat& a, const SturmBound& b) {
  // strip roots at the endpoints: a is excluded by (a, b], a root at finite b
  // contributes one
  int extra = 0;
  while (!sf.is_zero() && sf.degree() >= 1 && sign_at(sf, a) == 0) sf = primitive_int(deflate_root(RatPoly(sf), a));
  if (!b.infinite) {
    bool root_at_b = false;
    while (!sf.is_zero() && sf.degree() >= 1 && sign_at(sf, b.value) == 0) {
      root_at_b = true;
      sf = primitive_int(deflate_root(RatPoly(sf), b.value));
    }
    if (root_at_b) extra = 1;
  }
  if (sf.degree() <= 0) return extra;
  const auto chain = sturm_chain(sf);
  const int va = variations_at(chain, a);
  const int vb = b.infinite ? variations_at_infinity(chain) : variations_at(chain, b.value);
  return va - vb + extra;
}

}  // namespace

int sturm_root_count(const RatPoly& p, const BigRat& a, const SturmBound& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
  if (!b.infinite && !(a < b.value)) throw std::invalid_argument("sturm_root_count: need a < b");
  return root_count_impl(squarefree_part(primitive_int(p)), a, b);
}

int sturm_root_count(const CoeffPoly& p, const BigRat& a, const SturmBound& b) {
  return sturm_root_count(RatPoly(p), a, b);
}

std::vector<CoeffPoly> squarefree_decomposition(const CoeffPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<CoeffPoly> factors;
  RatPoly a(p);
  if (a.degree() == 0) return factors;
  // Yun's algorithm over Q
  RatPoly da = rat_derivative(a);
  RatPoly g = rat_gcd(a, da);
  RatPoly c = rat_quot(a, g);
  RatPoly d = [&] {
    RatPoly t = rat_quot(da, g);
    RatPoly dc = rat_derivative(c);
    std::vector<BigRat> diff(std::max(t.c.size(), dc.c.size()), BigRat(0));
    for (size_t i = 0; i < diff.size(); ++i) {
      BigRat lhs = i < t.c.size() ? t.c[i] : BigRat(0);
      BigRat rhs = i < dc.c.size() ? dc.c[i] : BigRat(0);
      diff[i] = lhs - rhs;
    }
    return RatPoly(std::move(diff));
  }();
  while (c.degree() > 0) {
    RatPoly f = rat_gcd(c, d);
    factors.push_back(primitive_int(f));
    c = rat_quot(c, f);
    RatPoly t = d.is_zero() ? RatPoly() : rat_quot(d, f);
    RatPoly dc = rat_derivative(c);
    std::vector<BigRat> diff(std::max(t.c.size(), dc.c.size()), BigRat(0));
    for (size_t i = 0; i < diff.size(); ++i) {
      BigRat lhs = i < t.c.size() ? t.c[i] : BigRat(0);
      BigRat rhs = i < dc.c.size() ? dc.c[i] : BigRat(0);
      diff[i] = lhs - rhs;
    }
    d = RatPoly(std::move(diff));
  }
  return factors;
}

CoeffPoly odd_multiplicity_part(const CoeffPoly& p) {
  const auto factors = squarefree_decomposition(p);
  CoeffPoly odd = CoeffPoly::constant(BigInt(1));
  for (size_t i = 0; i < factors.size(); ++i)
    if (i % 2 == 0 && factors[i].degree() > 0) odd = odd * factors[i];
  return odd;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::DominatesStrictlyOnOpenInterval: return "DominatesStrictlyOnOpenInterval";
    case Verdict::Dominates: return "Dominates";
    case Verdict::DominatedBy: return "DominatedBy";
    case Verdict::Crossing: return "Crossing";
  }
  return "?";
}

namespace {

std::vector<BigInt> measure_counts(const Graph& g, ReliabilityMeasure m) {
  switch (m) {
    case ReliabilityMeasure::NodeConnected: return connected_set_counts(g);
    case ReliabilityMeasure::NodeCopwin: return copwin_set_counts(g);
    case ReliabilityMeasure::EdgeCopwin: return edge_copwin_counts(g);
  }
  return {};
}

// sample points to locate a non-root of D inside (0,1)
BigRat find_nonroot_sample(const CoeffPoly& d) {
  static const std::pair<long, long> cands[] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {4, 5}, {1, 7}, {6, 7}, {1, 11}};
  for (auto [num, den] : cands) {
    const BigRat x = make_rat(num, den);
    if (sign_at(d, x) != 0) return x;
  }
  // degree-many roots cannot exclude every k/(deg+2)
  const long den = d.degree() + 2;
  for (long k = 1; k < den; ++k) {
    const BigRat x = make_rat(k, den);
    if (sign_at(d, x) != 0) return x;
  }
  throw std::logic_error("find_nonroot_sample: no sample found");
}

// two rationals in (0,1) where D takes opposite strict signs (crossing known
// to exist)
std::pair<std::pair<BigRat, int>, std::pair<BigRat, int>> find_crossing_witnesses(const CoeffPoly& d) {
  for (long den : {64L, 512L, 4096L, 65536L, 1048576L}) {
    int prev_sign = 0;
    BigRat prev_x;
    for (long k = 1; k < den; ++k) {
      const BigRat x = make_rat(k, den);
      const int s = sign_at(d, x);
      if (s == 0) continue;
      if (prev_sign != 0 && s != prev_sign) return {{prev_x, prev_sign}, {x, s}};
      prev_sign = s;
      prev_x = x;
    }
  }
  throw std::logic_error("find_crossing_witnesses: crossing not located by sampling");
}

}  // namespace

DominanceReport dominance(const Graph& g, const Graph& h, ReliabilityMeasure measure) {
  if (g.n != h.n) throw std::invalid_argument("dominance: graphs must have equal order");
  if (g.edge_count() != h.edge_count()) throw std::invalid_argument("dominance: graphs must have equal size");

  DominanceReport rep;
  const auto cg = measure_counts(g, measure);
  const auto ch = measure_counts(h, measure);
  rep.difference = reliability_poly(g, measure) - reliability_poly(h, measure);

  if (rep.difference.is_zero()) {
    rep.verdict = Verdict::Equal;
    rep.witnesses = {{make_rat(0, 1), 0}, {make_rat(1, 2), 0}, {make_rat(1, 1), 0}};
    return rep;
  }

  // fast path: coefficient-wise dominance of the count vectors. With all
  // differences >= 0 and one positive, every term d_i p^i (1-p)^(N-i) is
  // nonnegative and one is strictly positive throughout (0,1).
  bool all_ge = true, all_le = true;
  for (size_t i = 0; i < cg.size(); ++i) {
    if (cg[i] < ch[i]) all_ge = false;
    if (cg[i] > ch[i]) all_le = false;
  }
  if (all_ge || all_le) {
    rep.via_coeff_fastpath = true;
    rep.verdict = all_ge ? Verdict::DominatesStrictlyOnOpenInterval : Verdict::DominatedBy;
    const BigRat half = make_rat(1, 2);
    rep.witnesses = {{make_rat(0, 1), sign_at(rep.difference, make_rat(0, 1))},
                     {half, sign_at(rep.difference, half)},
                     {make_rat(1, 1), sign_at(rep.difference, make_rat(1, 1))}};
    return rep;
  }

  // exact path: sign-changing roots of the difference inside (0,1)
  const CoeffPoly odd = odd_multiplicity_part(rep.difference);
  const BigRat zero = make_rat(0, 1);
  const BigRat one = make_rat(1, 1);
  int signchanging = 0;
  if (odd.degree() > 0) {
    signchanging = root_count_impl(squarefree_part(odd), zero, SturmBound::at(one));
    if (sign_at(odd, one) == 0) --signchanging;  // (0,1] -> (0,1)
  }
  rep.root_count_in_01 = signchanging;

  if (signchanging > 0) {
    rep.verdict = Verdict::Crossing;
    auto [w1, w2] = find_crossing_witnesses(rep.difference);
    rep.witnesses = {w1, w2};
    return rep;
  }

  const CoeffPoly sf = squarefree_part(rep.difference);
  int distinct = root_count_impl(sf, zero, SturmBound::at(one));
  if (sign_at(sf, one) == 0) --distinct;

  const BigRat sample = find_nonroot_sample(rep.difference);
  const int sigma = sign_at(rep.difference, sample);
  rep.witnesses = {{zero, 0}, {sample, sigma}, {one, sign_at(rep.difference, one)}};
  if (sigma > 0)
    rep.verdict = (distinct == 0) ? Verdict::DominatesStrictlyOnOpenInterval : Verdict::Dominates;
  else
    rep.verdict = Verdict::DominatedBy;
  return rep;
}

namespace {

bool verdict_good_for_umr(Verdict v) {
  return v == Verdict::Equal || v == Verdict::Dominates || v == Verdict::DominatesStrictlyOnOpenInterval;
}

}  // namespace

UmrResult find_umr(int n, int cyclomatic, ReliabilityMeasure measure, int jobs) {
  const auto graphs = enumerate_class(GenSpec{n, cyclomatic});
  const size_t total = graphs.size();
  UmrResult result;
  result.class_size = static_cast<long long>(total);
  if (total == 0) return result;

  std::vector<std::vector<BigInt>> counts(total);
  parallel_for(total, jobs, [&](size_t i) { counts[i] = measure_counts(graphs[i], measure); });

  auto vec_cmp = [&](size_t i, size_t j) {
    // -1: counts[i] <= counts[j] with strict somewhere; 1: >=; 0: equal; 2: incomparable
    bool ge = true, le = true;
    for (size_t k = 0; k < counts[i].size(); ++k) {
      if (counts[i][k] < counts[j][k]) ge = false;
      if (counts[i][k] > counts[j][k]) le = false;
    }
    if (ge && le) return 0;
    if (ge) return 1;
    if (le) return -1;
    return 2;
  };

  std::vector<char> is_winner(total, 0);
  // deterministic regardless of thread count: each candidate records the
  // first crossing its own (sequential) scan hits; the smallest index wins
  std::vector<std::optional<std::pair<size_t, DominanceReport>>> crossings(total);
  parallel_for(total, jobs, [&](size_t i) {
    for (size_t j = 0; j < total; ++j) {
      if (j == i) continue;
      const int c = vec_cmp(i, j);
      if (c == 0 || c == 1) continue;
      if (c == -1) return;  // strictly dominated coefficient-wise
      DominanceReport rep = dominance(graphs[i], graphs[j], measure);
      if (rep.verdict == Verdict::Crossing) {
        crossings[i] = {j, std::move(rep)};
        return;
      }
      if (!verdict_good_for_umr(rep.verdict)) return;
    }
    is_winner[i] = 1;
  });

  for (size_t i = 0; i < total; ++i) {
    if (is_winner[i]) result.winners.push_back(graphs[i]);
    if (crossings[i] && !result.crossing_pair) {
      result.crossing_pair = {graphs[i], graphs[crossings[i]->first]};
      result.crossing_report = std::move(crossings[i]->second);
    }
  }
  return result;
}

ConjectureReport verify_conjecture_H(int n, int m, int jobs) {
  if (m < 3) throw std::invalid_argument("verify_conjecture_H: m >= 3 required (m <= 2 are theorems)");
  ConjectureReport report;
  report.n = n;
  report.m = m;
  FamilySpec hspec{};
  hspec.tag = FamilySpec::Tag::H;
  hspec.p1 = n;
  hspec.p2 = m;
  const Graph h = build(hspec);
  const CanonicalKey hkey = canonical_key(h);

  const auto graphs = enumerate_class(GenSpec{n, m});
  report.class_size = static_cast<long long>(graphs.size());

  // sanity: H_{n,m} must appear in its own class
  bool found_h = false;
  for (const auto& g : graphs)
    if (canonical_key(g) == hkey) found_h = true;
  if (!found_h) throw std::logic_error("verify_conjecture_H: H_{n,m} missing from enumerated class");

  std::vector<std::optional<DominanceReport>> failures(graphs.size());
  parallel_for(graphs.size(), jobs, [&](size_t i) {
    DominanceReport rep = dominance(h, graphs[i], ReliabilityMeasure::NodeCopwin);
    if (!verdict_good_for_umr(rep.verdict)) failures[i] = std::move(rep);
  });
  for (size_t i = 0; i < graphs.size(); ++i)
    if (failures[i]) {
      report.counterexample = graphs[i];
      report.counterexample_report = std::move(failures[i]);
      break;
    }
  report.holds = !report.counterexample.has_value();
  return report;
}

}  // namespace relcop
