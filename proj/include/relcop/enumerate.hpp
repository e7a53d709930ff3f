#pragma once

#include <set>
#include <string>
#include <vector>

#include "relcop/graph.hpp"

namespace relcop {

// Connected graphs with n vertices and n-1+m edges (m = cyclomatic number).
struct GenSpec {
  int n = 0;
  int cyclomatic = 0;
};

// Isomorph-free generation: trees by leaf augmentation, then `cyclomatic`
// levels of one-edge augmentation, deduplicated by canonical key per level.
// Output is deterministic, sorted by canonical key. Bounds: n <= 7 for any m,
// n <= 11 for m <= 2, n <= 10 for m == 3.
std::vector<Graph> enumerate_class(const GenSpec& spec);
std::set<std::string> enumerate_keys(const GenSpec& spec);
long long enumerate_count(const GenSpec& spec);

// Independent second generator (n <= 7): filters all C(C(n,2), n-1+m)
// labelled edge subsets through connectivity and canonical dedup.
std::set<std::string> enumerate_keys_bruteforce(const GenSpec& spec);

// All connected graphs of order exactly n, every cyclomatic number (n <= 8):
// a single augmentation sweep across all edge levels.
std::vector<Graph> enumerate_connected_all(int n);

// One graph6 string per line, in canonical order.
void enumerate_to_stream(const GenSpec& spec, std::ostream& out);

}  // namespace relcop
