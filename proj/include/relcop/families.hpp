#pragma once

#include <array>
#include <string>

#include "relcop/graph.hpp"
#include "relcop/poly.hpp"

namespace relcop {

// Parametric descriptor of the named graph families. Compact string syntax:
// "C:6", "STAR:7", "U:8", "A:6", "B:9", "F:2,1", "G1:3,4", "G2:3,4,2",
// "G3:1,1,4", "H:9,3" (tags case-insensitive).
struct FamilySpec {
  enum class Tag { Cycle, Star, U, A, B, F, G1, G2, G3, H };
  Tag tag;
  int p1 = 0, p2 = 0, p3 = 0;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph build(const FamilySpec& spec);

// Closed-form count polynomials, produced purely from the formulas (never from
// enumeration). Supported: U, Cycle, A, B and F(n-5, 0), all with n >= 5.
// Note: the A_n forms keep the published x^(n-1) coefficient, which
// disagrees with direct counting (enumeration is ground truth there).
CoeffPoly closed_form_cw(const FamilySpec& spec);
CoeffPoly closed_form_cs(const FamilySpec& spec);

// Base-graph classification of a connected graph with |E| = |V|+1.
// Parameters are normalized: Type1 (a<=b), Type2 (a<=b, c), Type3 (a<=b<=c).
struct BicyclicType {
  int kind = 0;  // 1, 2 or 3
  std::array<int, 3> params{0, 0, 0};
  bool operator==(const BicyclicType&) const = default;
};

BicyclicType classify_bicyclic(const Graph& g);

// Number of k-subsets of vertices whose removal disconnects g (g connected,
// 1 <= k < n). Satisfies S_(n-k) = C(n,k) - count_cut_sets(g, k).
long long count_cut_sets(const Graph& g, int k);

}  // namespace relcop
