#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcop/enumerate.hpp"
#include "relcop/graph.hpp"
#include "relcop/poly.hpp"
#include "relcop/relpoly.hpp"

namespace relcop {

// Polynomial with exact rational coefficients (Sturm sequence carrier).
// Canonical form: nonzero leading coefficient.
struct RatPoly {
  std::vector<BigRat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs) : c(std::move(coeffs)) { normalize(); }
  explicit RatPoly(const CoeffPoly& p);

  void normalize();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

// Right endpoint of a root-count interval; +infinity supported symbolically.
struct SturmBound {
  bool infinite = false;
  BigRat value{0};
  static SturmBound at(const BigRat& v) { return SturmBound{false, v}; }
  static SturmBound infinity() { return SturmBound{true, BigRat(0)}; }
};

// Exact number of distinct real roots of the squarefree part of p in (a, b].
int sturm_root_count(const RatPoly& p, const BigRat& a, const SturmBound& b);
int sturm_root_count(const CoeffPoly& p, const BigRat& a, const SturmBound& b);

// Yun squarefree decomposition: returns primitive integer factors f_1..f_k
// with p ~ prod f_i^i up to a rational constant (factors may be constant 1).
std::vector<CoeffPoly> squarefree_decomposition(const CoeffPoly& p);

// Product of odd-multiplicity factors: its roots are exactly the
// sign-changing roots of p.
CoeffPoly odd_multiplicity_part(const CoeffPoly& p);

enum class Verdict { Equal, DominatesStrictlyOnOpenInterval, Dominates, DominatedBy, Crossing };

std::string verdict_name(Verdict v);

// Exact classification of sign(R(g,p) - R(h,p)) on [0,1]. Witnesses are
// (rational point, sign of the difference there) certificates; Crossing
// always carries two witnesses of opposite strict sign.
struct DominanceReport {
  Verdict verdict = Verdict::Equal;
  std::vector<std::pair<BigRat, int>> witnesses;
  int root_count_in_01 = 0;  // sign-changing roots of the difference in (0,1)
  CoeffPoly difference;      // R(g,p) - R(h,p), exact monomial coefficients
  bool via_coeff_fastpath = false;
};

// g and h must have equal order and equal edge count (UMR compares graphs
// built from the same resources); anything else is rejected.
DominanceReport dominance(const Graph& g, const Graph& h, ReliabilityMeasure measure);

struct UmrResult {
  std::vector<Graph> winners;  // graphs dominating every member of the class
  long long class_size = 0;
  // present whenever some comparison crossed; mandatory when winners is empty
  std::optional<std::pair<Graph, Graph>> crossing_pair;
  std::optional<DominanceReport> crossing_report;
};

UmrResult find_umr(int n, int cyclomatic, ReliabilityMeasure measure, int jobs = 1);

struct ConjectureReport {
  int n = 0, m = 0;
  bool holds = false;
  long long class_size = 0;
  std::optional<Graph> counterexample;
  std::optional<DominanceReport> counterexample_report;
};

// Checks H_{n,m} against every m-cyclic graph of order n (node cop-win
// measure). m >= 3 required; m <= 2 are theorems, not conjecture.
ConjectureReport verify_conjecture_H(int n, int m, int jobs = 1);

}  // namespace relcop
