#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftline/rational.hpp"

namespace liftline {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Finite multidigraph. Loops and parallel arcs are allowed.
///
/// Vertices are the indices 0..order-1. Arcs keep construction order, so arc
/// index i always refers to the i-th pair passed to the constructor; nothing
/// is ever reordered. Every vertex carries a text label (default: its decimal
/// index). Instances are immutable after construction and safe to share.
class Digraph {
 public:
  Digraph(int order, std::vector<Arc> arcs);
  Digraph(int order, std::vector<Arc> arcs, std::vector<std::string> labels,
          std::string name = "");

  int order() const { return order_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const std::string& name() const { return name_; }

  const Arc& arc(int e) const { return arcs_[e]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int tail(int e) const { return arcs_[e].tail; }
  int head(int e) const { return arcs_[e].head; }

  /// Arc indices leaving v, ascending.
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
  /// Arc indices entering v, ascending.
  const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }

  // Degrees count arcs, so parallel arcs contribute their multiplicity.
  int out_degree(int v) const { return static_cast<int>(out_arcs_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_arcs_[v].size()); }

  /// Distinct out-neighbors of v, sorted.
  std::vector<int> out_neighbor_set(int v) const;
  /// Distinct in-neighbors of v, sorted.
  std::vector<int> in_neighbor_set(int v) const;

  /// Number of arcs u -> v.
  int multiplicity(int u, int v) const;
  bool has_parallel_arcs() const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int order_ = 0;
  std::string name_;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<std::vector<int>> in_arcs_;
};

/// Hop-count distance table. Entry kUnreachable marks a missing directed path.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const { return order_; }
  int at(int u, int v) const { return entries_[static_cast<size_t>(u) * order_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

 private:
  int order_;
  std::vector<int> entries_;  // row-major
};

/// Fewest-arcs distances from every vertex, one breadth-first search per
/// source. Arc multiplicities are irrelevant to hops.
DistanceMatrix all_pairs_distances(const Digraph& g);

struct Metrics {
  int order = 0;
  int size = 0;
  int min_in = 0;
  int max_in = 0;
  int min_out = 0;
  int max_out = 0;
  // Present only when the digraph is strongly connected.
  std::optional<int> diameter;
  // Mean of dist(u, v) over ordered pairs u != v, exact.
  std::optional<Rational> mean_distance;
};

Metrics metrics(const Digraph& g);

}  // namespace liftline
