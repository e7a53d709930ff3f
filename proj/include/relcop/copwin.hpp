#pragma once

#include <vector>

#include "relcop/graph.hpp"

namespace relcop {

// Record of a greedy dismantling run. On success every removed vertex was
// dominated (closed neighbourhoods) at its removal time and one vertex
// remains; `order` holds the removed vertices under their original labels.
struct DismantleTrace {
  std::vector<int> order;
  bool success = false;
};

// Dismantles by repeatedly removing the lowest-indexed dominated vertex.
// Disconnected or empty input fails (a robber in another component is never
// caught); a single vertex succeeds.
DismantleTrace dismantle(const Graph& g);
bool is_copwin(const Graph& g);

// Same decision restricted to the subgraph induced by `s`.
bool is_copwin_subset(const Graph& g, VertexSet s);

// Independent oracle: backward induction on the one-cop pursuit game
// (cop places, robber places, cop moves first). n <= 12.
bool is_copwin_game(const Graph& g);

// Perfect elimination ordering via repeated simplicial-vertex removal.
bool is_chordal(const Graph& g);

// Brute-force scan for an induced cycle of length >= 4; must equal
// !is_chordal on every graph. Exponential in n, intended for n <= 24.
bool has_long_induced_cycle(const Graph& g);

}  // namespace relcop
