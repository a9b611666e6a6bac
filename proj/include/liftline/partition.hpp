#pragma once

#include <optional>
#include <vector>

#include "liftline/digraph.hpp"

namespace liftline {

/// Vertex partition: non-empty, pairwise disjoint blocks covering 0..n-1.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

void validate_partition(const Partition& p, int order);

/// Block-of-vertex lookup for a validated partition.
std::vector<int> block_index(const Partition& p, int order);

/// Intersection parameters of a regular partition: c(i, j) arcs from each
/// vertex of block i into block j, counted with multiplicity.
class IntersectionMatrix {
 public:
  IntersectionMatrix(int blocks, std::vector<int> entries)
      : blocks_(blocks), entries_(std::move(entries)) {}
  int block_count() const { return blocks_; }
  int at(int i, int j) const { return entries_[static_cast<size_t>(i) * blocks_ + j]; }

 private:
  int blocks_;
  std::vector<int> entries_;  // row-major
};

/// Outcome of a regularity check: the matrix when regular, otherwise a pair
/// of same-block vertices whose arc counts into some block disagree.
struct RegularityCheck {
  std::optional<IntersectionMatrix> matrix;
  int witness_u = -1;
  int witness_v = -1;
  bool regular() const { return matrix.has_value(); }
};

RegularityCheck check_regular(const Digraph& g, const Partition& p);

/// Quotient digraph: one vertex per block, c(i, j) parallel arcs i -> j.
/// Throws when the partition is not regular.
Digraph quotient(const Digraph& g, const Partition& p);

/// Partition of line_digraph(g)'s vertices by (tail block, head block) of the
/// underlying arcs; empty classes dropped, blocks ordered lexicographically
/// by block pair. Regular whenever p is regular on g.
Partition induced_arc_partition(const Digraph& g, const Partition& p);

/// Whether line_digraph(quotient(g, p)) and
/// quotient(line_digraph(g), induced_arc_partition(g, p)) are isomorphic
/// (multiplicity-aware).
bool verify_commutation(const Digraph& g, const Partition& p);

}  // namespace liftline
