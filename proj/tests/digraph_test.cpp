#include "doctest.h"

#include <random>

#include "liftline/digraph.hpp"
#include "testutil.hpp"

using namespace liftline;

namespace {

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

// Complete digraph with loops on two vertices (= B(2,1)).
Digraph b21() { return Digraph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

// B(2,2) built straight from the shift rule: vertices 00,01,10,11.
Digraph b22() {
  std::vector<Arc> arcs;
  for (int w = 0; w < 4; ++w)
    for (int y = 0; y < 2; ++y) arcs.push_back({w, (w % 2) * 2 + y});
  return Digraph(4, std::move(arcs));
}

}  // namespace

TEST_CASE("digraph construction") {
  Digraph g(2, {{0, 1}});
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.tail(0) == 0);
  CHECK(g.head(0) == 1);
  CHECK(g.label(0) == "0");
  CHECK(g.label(1) == "1");

  Digraph b = b21();
  CHECK(b.order() == 2);
  CHECK(b.size() == 4);
  CHECK(b.out_degree(0) == 2);
  CHECK(b.in_degree(1) == 2);
  CHECK_FALSE(b.has_parallel_arcs());

  CHECK_THROWS_AS(Digraph(1, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency accessors") {
  Digraph g(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  CHECK(g.has_parallel_arcs());
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 0) == 0);
  CHECK(g.out_neighbor_set(0) == std::vector<int>{1});
  CHECK(g.in_neighbor_set(2) == std::vector<int>{1, 2});
  CHECK(g.out_arcs(0) == std::vector<int>{0, 1});
  CHECK(g.in_arcs(2) == std::vector<int>{2, 3});
}

TEST_CASE("all pairs distances") {
  DistanceMatrix d3 = all_pairs_distances(directed_cycle(3));
  CHECK(d3.at(0, 2) == 2);
  CHECK(d3.at(0, 0) == 0);
  CHECK(d3.at(2, 0) == 1);

  // Expected value frozen from the Floyd-Warshall oracle.
  Digraph b = b22();
  auto oracle = testutil::floyd_warshall(b);
  CHECK(oracle[0][3] == 2);  // 00 -> 11
  DistanceMatrix d = all_pairs_distances(b);
  CHECK(d.at(0, 3) == 2);

  DistanceMatrix single = all_pairs_distances(Digraph(1, {}));
  CHECK(single.order() == 1);
  CHECK(single.at(0, 0) == 0);

  Digraph disconnected(2, {{0, 1}});
  CHECK_FALSE(all_pairs_distances(disconnected).reachable(1, 0));
}

TEST_CASE("distances agree with the Floyd-Warshall oracle") {
  std::mt19937 rng(20240518);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph g = testutil::random_multidigraph(rng);
    auto oracle = testutil::floyd_warshall(g);
    DistanceMatrix d = all_pairs_distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) REQUIRE(d.at(u, v) == oracle[u][v]);
  }
}

TEST_CASE("metrics on fixed instances") {
  Metrics mb = metrics(b21());
  CHECK(mb.diameter == 1);
  CHECK(mb.mean_distance == Rational(1));
  CHECK(mb.min_in == 2);
  CHECK(mb.max_out == 2);

  for (int n = 2; n <= 6; ++n) {
    Metrics mc = metrics(directed_cycle(n));
    CHECK(mc.diameter == n - 1);
    CHECK(mc.mean_distance == Rational(n, 2));
  }

  CHECK(metrics(b22()).diameter == 2);

  Metrics unreachable = metrics(Digraph(2, {{0, 1}}));
  CHECK_FALSE(unreachable.diameter.has_value());
  CHECK_FALSE(unreachable.mean_distance.has_value());
  CHECK(unreachable.size == 1);

  Metrics single = metrics(Digraph(1, {}));
  CHECK(single.diameter == 0);
}

TEST_CASE("degree sums and distance laws") {
  std::mt19937 rng(7031);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph g = testutil::random_multidigraph(rng);
    long long out_sum = 0, in_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
    }
    REQUIRE(out_sum == g.size());
    REQUIRE(in_sum == g.size());

    DistanceMatrix d = all_pairs_distances(g);
    for (int i = 0; i < g.order(); ++i) {
      REQUIRE(d.at(i, i) == 0);
      for (int j = 0; j < g.order(); ++j) {
        if (i == j) continue;
        REQUIRE((d.at(i, j) == 1) == (g.multiplicity(i, j) > 0));
        for (int k = 0; k < g.order(); ++k)
          if (d.at(i, k) >= 0 && d.at(k, j) >= 0 && d.at(i, j) >= 0)
            REQUIRE(d.at(i, j) <= d.at(i, k) + d.at(k, j));
      }
    }

    Metrics m = metrics(g);
    if (m.diameter)
      REQUIRE(*m.mean_distance <= Rational(*m.diameter));
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(2, 3) + Rational(1, 3) == Rational(1));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(3, 2) < Rational(2));
  CHECK(Rational(4, 3).str() == "4/3");
  CHECK(Rational(8, 4).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
