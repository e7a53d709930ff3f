#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "relcop/copwin.hpp"
#include "relcop/enumerate.hpp"
#include "relcop/families.hpp"
#include "relcop/graph.hpp"

using namespace relcop;

namespace {

Graph random_connected(std::mt19937& rng, int n, double p) {
  std::uniform_real_distribution<double> unif(0, 1);
  for (;;) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unif(rng) < p) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("dismantling basics") {
  // every tree is cop-win
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : enumerate_class(GenSpec{n, 0})) CHECK(is_copwin(t));

  CHECK_FALSE(is_copwin(build(FamilySpec::parse("C:4"))));
  for (int n = 4; n <= 10; ++n) CHECK_FALSE(is_copwin(build(FamilySpec::parse("C:" + std::to_string(n)))));
  CHECK(is_copwin(build(FamilySpec::parse("C:3"))));

  // wheel C_5 v K_1
  CHECK(is_copwin(join(build(FamilySpec::parse("C:5")), Graph(1))));

  CHECK_FALSE(is_copwin(build(FamilySpec::parse("A:6"))));

  // disconnected and empty inputs fail; K_1 succeeds
  CHECK_FALSE(is_copwin(Graph(0)));
  CHECK_FALSE(is_copwin(Graph(3)));
  CHECK(is_copwin(Graph(1)));
}

TEST_CASE("dismantle trace is a certificate") {
  const Graph w = join(build(FamilySpec::parse("C:5")), Graph(1));
  const DismantleTrace trace = dismantle(w);
  REQUIRE(trace.success);
  CHECK(trace.order.size() == static_cast<size_t>(w.n - 1));
  // replay: each removed vertex dominated at its removal time
  std::uint64_t cur = w.full_set();
  for (int u : trace.order) {
    const std::uint64_t nu = (w.adj[u] | vbit(u)) & cur;
    bool dominated = false;
    for (int v = 0; v < w.n && !dominated; ++v) {
      if (v == u || !(cur & vbit(v))) continue;
      const std::uint64_t nv = (w.adj[v] | vbit(v)) & cur;
      if ((nu & ~nv) == 0) dominated = true;
    }
    CHECK(dominated);
    cur &= ~vbit(u);
  }
  CHECK(std::popcount(cur) == 1);
}

TEST_CASE("game oracle basics") {
  CHECK(is_copwin_game(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(is_copwin_game(build(FamilySpec::parse("C:4"))));
  CHECK(is_copwin_game(join(build(FamilySpec::parse("C:5")), Graph(1))));
  CHECK_THROWS_AS(is_copwin_game(Graph(13)), std::invalid_argument);
}

TEST_CASE("dismantling equals game search, exhaustive n<=7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_all(n)) REQUIRE(is_copwin(g) == is_copwin_game(g));
}

TEST_CASE("dismantling equals game search, 10000 random connected n<=12") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick_n(2, 12);
  const double probs[] = {0.2, 0.3, 0.45, 0.6};
  for (int t = 0; t < 10000; ++t) {
    const Graph g = random_connected(rng, pick_n(rng), probs[t % 4]);
    REQUIRE(is_copwin(g) == is_copwin_game(g));
  }
}

TEST_CASE("chordality") {
  for (int n = 5; n <= 10; ++n) CHECK(is_chordal(build(FamilySpec::parse("U:" + std::to_string(n)))));
  CHECK_FALSE(is_chordal(build(FamilySpec::parse("C:4"))));
  CHECK(is_chordal(build(FamilySpec::parse("F:2,1"))));
  CHECK(is_chordal(Graph(0)));
  CHECK(is_chordal(Graph(3)));
}

TEST_CASE("long induced cycles") {
  CHECK(has_long_induced_cycle(build(FamilySpec::parse("G3:1,1,4"))));
  CHECK_FALSE(has_long_induced_cycle(build(FamilySpec::parse("B:8"))));
  CHECK_FALSE(has_long_induced_cycle(build(FamilySpec::parse("C:3"))));
}

TEST_CASE("chordal iff no long induced cycle") {
  // all labelled graphs n <= 6 (covers disconnected), all connected n = 7, 8
  for (int n = 1; n <= 6; ++n) {
    const int slots = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
      Graph g(n);
      for (int e = 0; e < slots; ++e)
        if ((mask >> e) & 1) g.add_edge(es[e].first, es[e].second);
      REQUIRE(is_chordal(g) == !has_long_induced_cycle(g));
    }
  }
  for (int n = 7; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_all(n)) REQUIRE(is_chordal(g) == !has_long_induced_cycle(g));
  // disconnected order-8 coverage via disjoint unions
  const auto small = enumerate_connected_all(4);
  for (const Graph& a : small)
    for (const Graph& b : small) {
      const Graph g = disjoint_union(a, b);
      REQUIRE(is_chordal(g) == !has_long_induced_cycle(g));
    }
}

TEST_CASE("connected chordal graphs are cop-win (n<=8)") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_all(n))
      if (is_chordal(g)) CHECK(is_copwin(g));
}

TEST_CASE("unicyclic graphs with a long induced cycle are not cop-win (n<=9)") {
  for (int n = 3; n <= 9; ++n)
    for (const Graph& g : enumerate_class(GenSpec{n, 1}))
      if (has_long_induced_cycle(g)) CHECK_FALSE(is_copwin(g));
}
