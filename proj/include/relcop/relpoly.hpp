#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "relcop/graph.hpp"
#include "relcop/poly.hpp"

namespace relcop {

// Which count sequence feeds the probability form.
enum class ReliabilityMeasure { NodeConnected, NodeCopwin, EdgeCopwin };

std::string measure_name(ReliabilityMeasure m);
ReliabilityMeasure measure_from_name(const std::string& s);

// Direct enumerators over all 2^n vertex subsets (n <= 24).
// Returned vectors are [S_1..S_n] resp. [W_1..W_n].
std::vector<BigInt> connected_set_counts(const Graph& g);
std::vector<BigInt> copwin_set_counts(const Graph& g);

// Spanning-subgraph cop-win counts by number of operational edges, [N_0..N_m]
// (m <= 24). A spanning subgraph with an isolated vertex is not cop-win.
std::vector<BigInt> edge_copwin_counts(const Graph& g);

CoeffPoly cs_poly(const Graph& g);
CoeffPoly cw_poly(const Graph& g);

// CS via the pivoting recursion
//   CS(G) = CS(G-v) + x (CS(G/v) - CS(G-N[v]) + 1),
// memoized on canonical keys, components summed. Equals cs_poly exactly.
using PivotCache = std::unordered_map<std::string, CoeffPoly>;
CoeffPoly cs_poly_pivot(const Graph& g, PivotCache& cache);
CoeffPoly cs_poly_pivot(const Graph& g);

// NRel(G,p) by the pivoting recursion with the degree correction term;
// exact rational arithmetic, p in [0,1].
BigRat nrel_pivot(const Graph& g, const BigRat& p);

// Direct evaluation sum_i counts_i (1-p)^(n-i) p^i.
BigRat reliability_eval(const Graph& g, ReliabilityMeasure m, const BigRat& p);

// Expanded univariate polynomial in the operational probability (exact
// integer coefficients in the monomial basis). For EdgeCopwin the variable is
// the edge operational probability q.
CoeffPoly reliability_poly(const Graph& g, ReliabilityMeasure m);

// counts are [C_1..C_N] (or [C_0..C_N] when with_zero); expands
// sum_i C_i p^i (1-p)^(N-i).
CoeffPoly reliability_from_counts(const std::vector<BigInt>& counts, int N, bool with_zero = false);

// Checks (1-p)^n CW(G, p/(1-p)) == NCRel(G,p) after clearing denominators,
// given the counts [W_1..W_n].
bool mobius_bridge(const std::vector<BigInt>& copwin_counts);

// b <= a coefficient-wise and deg(b) <= deg(a): "a dominates b".
bool coeff_dominates(const CoeffPoly& a, const CoeffPoly& b);

}  // namespace relcop
