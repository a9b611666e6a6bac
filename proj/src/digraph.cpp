#include "liftline/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace liftline {

namespace {

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (int v = 0; v < order; ++v) labels.push_back(std::to_string(v));
  return labels;
}

}  // namespace

Digraph::Digraph(int order, std::vector<Arc> arcs)
    : Digraph(order, std::move(arcs), default_labels(order)) {}

Digraph::Digraph(int order, std::vector<Arc> arcs, std::vector<std::string> labels,
                 std::string name)
    : order_(order),
      name_(std::move(name)),
      arcs_(std::move(arcs)),
      labels_(std::move(labels)) {
  if (order_ < 0) throw std::invalid_argument("Digraph: negative order");
  if (static_cast<int>(labels_.size()) != order_)
    throw std::invalid_argument("Digraph: label count does not match order");
  out_arcs_.resize(order_);
  in_arcs_.resize(order_);
  for (size_t e = 0; e < arcs_.size(); ++e) {
    const Arc& a = arcs_[e];
    if (a.tail < 0 || a.tail >= order_ || a.head < 0 || a.head >= order_)
      throw std::invalid_argument("Digraph: arc " + std::to_string(e) +
                                  " has an endpoint out of range");
    out_arcs_[a.tail].push_back(static_cast<int>(e));
    in_arcs_[a.head].push_back(static_cast<int>(e));
  }
}

std::vector<int> Digraph::out_neighbor_set(int v) const {
  std::vector<int> nbrs;
  nbrs.reserve(out_arcs_[v].size());
  for (int e : out_arcs_[v]) nbrs.push_back(arcs_[e].head);
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  return nbrs;
}

std::vector<int> Digraph::in_neighbor_set(int v) const {
  std::vector<int> nbrs;
  nbrs.reserve(in_arcs_[v].size());
  for (int e : in_arcs_[v]) nbrs.push_back(arcs_[e].tail);
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  return nbrs;
}

int Digraph::multiplicity(int u, int v) const {
  int count = 0;
  for (int e : out_arcs_[u])
    if (arcs_[e].head == v) ++count;
  return count;
}

bool Digraph::has_parallel_arcs() const {
  std::vector<Arc> sorted = arcs_;
  std::sort(sorted.begin(), sorted.end(), [](const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

DistanceMatrix all_pairs_distances(const Digraph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<int> dist(n);
  std::queue<int> queue;
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int e : g.out_arcs(u)) {
        int w = g.head(e);
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    std::copy(dist.begin(), dist.end(), entries.begin() + static_cast<size_t>(src) * n);
  }
  return DistanceMatrix(n, std::move(entries));
}

Metrics metrics(const Digraph& g) {
  Metrics m;
  m.order = g.order();
  m.size = g.size();
  const int n = g.order();
  if (n == 0) return m;

  m.min_in = m.max_in = g.in_degree(0);
  m.min_out = m.max_out = g.out_degree(0);
  for (int v = 1; v < n; ++v) {
    m.min_in = std::min(m.min_in, g.in_degree(v));
    m.max_in = std::max(m.max_in, g.in_degree(v));
    m.min_out = std::min(m.min_out, g.out_degree(v));
    m.max_out = std::max(m.max_out, g.out_degree(v));
  }

  DistanceMatrix dist = all_pairs_distances(g);
  long long total = 0;
  int diameter = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int d = dist.at(u, v);
      if (d == DistanceMatrix::kUnreachable) return m;  // not strongly connected
      total += d;
      diameter = std::max(diameter, d);
    }
  }
  m.diameter = diameter;
  long long pairs = static_cast<long long>(n) * (n - 1);
  m.mean_distance = pairs == 0 ? Rational(0) : Rational(total, pairs);
  return m;
}

}  // namespace liftline
