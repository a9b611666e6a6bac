#include "doctest.h"

#include <random>

#include "liftline/families.hpp"
#include "liftline/iso.hpp"
#include "liftline/partition.hpp"
#include "testutil.hpp"

using namespace liftline;

namespace {

Partition singletons(int n) {
  Partition p;
  for (int v = 0; v < n; ++v) p.blocks.push_back({v});
  return p;
}

Partition fibers_of(const FiberedDigraph& fd) {
  return Partition{fd.fibers};
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(validate_partition(Partition{{{0}, {}}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition(Partition{{{0, 2}}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition(Partition{{{0}, {0, 1}}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition(Partition{{{0}}}, 2), std::invalid_argument);
  validate_partition(Partition{{{1}, {0}}}, 2);
}

TEST_CASE("regularity checks") {
  Digraph b22 = de_bruijn(contiguous_alphabet(2), 2);

  // Singleton blocks are always regular with per-pair multiplicities.
  RegularityCheck s = check_regular(b22, singletons(4));
  REQUIRE(s.regular());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(s.matrix->at(i, j) == b22.multiplicity(i, j));

  // Two-block partition {00,11}, {01,10}.
  Partition two{{{0, 3}, {1, 2}}};
  RegularityCheck r = check_regular(b22, two);
  REQUIRE(r.regular());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(r.matrix->at(i, j) == 1);

  // One block: regular iff out-regular.
  RegularityCheck one = check_regular(b22, Partition{{{0, 1, 2, 3}}});
  REQUIRE(one.regular());
  CHECK(one.matrix->at(0, 0) == 2);

  Digraph skew(3, {{0, 1}, {0, 2}, {1, 2}});
  RegularityCheck bad = check_regular(skew, Partition{{{0, 1, 2}}});
  REQUIRE_FALSE(bad.regular());
  // The witness pair really disagrees.
  CHECK(skew.out_degree(bad.witness_u) != skew.out_degree(bad.witness_v));
}

TEST_CASE("quotients") {
  Digraph b22 = de_bruijn(contiguous_alphabet(2), 2);
  CHECK(testutil::same_digraph(quotient(b22, singletons(4)), b22));

  Digraph q = quotient(b22, Partition{{{0, 3}, {1, 2}}});
  CHECK(q.order() == 2);
  CHECK(q.size() == 4);
  CHECK(q.multiplicity(0, 0) == 1);
  CHECK(q.multiplicity(0, 1) == 1);
  CHECK(q.multiplicity(1, 0) == 1);
  CHECK(q.multiplicity(1, 1) == 1);

  Digraph skew(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(quotient(skew, Partition{{{0, 1, 2}}}), std::invalid_argument);
}

TEST_CASE("lift fibers are regular partitions that quotient back to the base") {
  std::mt19937 rng(1212);
  for (int trial = 0; trial < 60; ++trial) {
    Digraph base = testutil::random_multidigraph(rng, 5);
    VoltageAssignment va = testutil::random_voltage(base, rng);
    FiberedDigraph fd = lift(base, va);
    RegularityCheck rc = check_regular(fd.graph, fibers_of(fd));
    REQUIRE(rc.regular());
    for (int i = 0; i < base.order(); ++i)
      for (int j = 0; j < base.order(); ++j)
        REQUIRE(rc.matrix->at(i, j) == base.multiplicity(i, j));

    // Quotient by the fibers gives back the base's multiplicity matrix.
    Digraph q = quotient(fd.graph, fibers_of(fd));
    REQUIRE(q.order() == base.order());
    for (int i = 0; i < base.order(); ++i)
      for (int j = 0; j < base.order(); ++j)
        REQUIRE(q.multiplicity(i, j) == base.multiplicity(i, j));
  }
}

TEST_CASE("induced arc partitions") {
  Digraph b22 = de_bruijn(contiguous_alphabet(2), 2);
  Partition p{{{0, 3}, {1, 2}}};

  Partition singles = induced_arc_partition(b22, singletons(4));
  CHECK(singles.blocks.size() == 8);

  Partition induced = induced_arc_partition(b22, p);
  CHECK(induced.blocks.size() <= 4);
  int covered = 0;
  for (const auto& block : induced.blocks) covered += static_cast<int>(block.size());
  CHECK(covered == 8);
  CHECK(check_regular(line_digraph(b22), induced).regular());

  Digraph skew(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(induced_arc_partition(skew, Partition{{{0, 1, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("line and quotient operations commute") {
  Digraph b22 = de_bruijn(contiguous_alphabet(2), 2);
  CHECK(verify_commutation(b22, singletons(4)));
  CHECK(verify_commutation(b22, Partition{{{0, 3}, {1, 2}}}));

  std::mt19937 rng(777);
  int ran = 0;
  while (ran < 60) {
    Digraph base = testutil::random_simple_digraph(rng, 4);
    if (base.size() == 0) continue;
    VoltageAssignment va = testutil::random_voltage(base, rng);
    FiberedDigraph fd = lift(base, va);
    REQUIRE(verify_commutation(fd.graph, fibers_of(fd)));
    ++ran;
  }
}

TEST_CASE("commutation needs multiplicity-free quotients") {
  // With parallel base arcs the fiber quotient has c >= 2 parallel arcs, and
  // the two sides differ already in order (sum of c vs count of nonzero c).
  Digraph base(1, {{0, 0}, {0, 0}});
  VoltageAssignment va{cyclic_group(2), {0, 1}};
  FiberedDigraph fd = lift(base, va);
  Partition fibers = fibers_of(fd);
  REQUIRE(check_regular(fd.graph, fibers).regular());
  Digraph lhs = line_digraph(quotient(fd.graph, fibers));
  Partition induced = induced_arc_partition(fd.graph, fibers);
  Digraph rhs = quotient(line_digraph(fd.graph), induced);
  CHECK(lhs.order() == 2);
  CHECK(rhs.order() == 1);
  CHECK_FALSE(verify_commutation(fd.graph, fibers));
}
