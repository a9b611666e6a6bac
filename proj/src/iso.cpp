#include "liftline/iso.hpp"

#include <algorithm>
#include <map>

namespace liftline {

namespace {

std::vector<int> multiplicity_matrix(const Digraph& g) {
  const int n = g.order();
  std::vector<int> mult(static_cast<size_t>(n) * n, 0);
  for (const Arc& a : g.arcs()) ++mult[static_cast<size_t>(a.tail) * n + a.head];
  return mult;
}

// Invariant key of a vertex: degrees, loop count, then the sorted outgoing
// and incoming distance profiles. Isomorphic images must share the key.
std::vector<int> invariant_key(const Digraph& g, const DistanceMatrix& dist,
                               const std::vector<int>& mult, int v) {
  const int n = g.order();
  std::vector<int> key;
  key.reserve(2 * n + 3);
  key.push_back(g.out_degree(v));
  key.push_back(g.in_degree(v));
  key.push_back(mult[static_cast<size_t>(v) * n + v]);
  std::vector<int> profile(n);
  for (int u = 0; u < n; ++u) profile[u] = dist.at(v, u);
  std::sort(profile.begin(), profile.end());
  key.insert(key.end(), profile.begin(), profile.end());
  for (int u = 0; u < n; ++u) profile[u] = dist.at(u, v);
  std::sort(profile.begin(), profile.end());
  key.insert(key.end(), profile.begin(), profile.end());
  return key;
}

struct Search {
  int n;
  const std::vector<int>& mult_a;
  const std::vector<int>& mult_b;
  const std::vector<std::vector<int>>& candidates;  // per vertex of a, ascending
  const std::vector<int>& order;                    // assignment order over a's vertices
  std::vector<int> assigned;                        // a-vertex -> b-vertex or -1
  std::vector<bool> used;                           // b-vertex taken
  long long budget;
  bool exhausted = false;

  bool run(int depth) {
    if (depth == n) return true;
    int u = order[depth];
    for (int w : candidates[u]) {
      if (used[w]) continue;
      if (--budget < 0) {
        exhausted = true;
        return false;
      }
      bool consistent = true;
      for (int j = 0; j < depth; ++j) {
        int u2 = order[j];
        int w2 = assigned[u2];
        if (mult_a[static_cast<size_t>(u) * n + u2] != mult_b[static_cast<size_t>(w) * n + w2] ||
            mult_a[static_cast<size_t>(u2) * n + u] != mult_b[static_cast<size_t>(w2) * n + w]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      assigned[u] = w;
      used[w] = true;
      if (run(depth + 1)) return true;
      assigned[u] = -1;
      used[w] = false;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

bool verify_witness(const Digraph& a, const Digraph& b, const IsoWitness& witness) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(witness.map.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : witness.map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (a.multiplicity(u, v) != b.multiplicity(witness.map[u], witness.map[v]))
        return false;
  return true;
}

IsoResult is_isomorphic(const Digraph& a, const Digraph& b, long long node_budget) {
  IsoResult result;
  if (a.order() != b.order() || a.size() != b.size()) return result;
  const int n = a.order();
  if (n == 0) {
    result.status = IsoStatus::isomorphic;
    result.witness = IsoWitness{};
    return result;
  }

  const std::vector<int> mult_a = multiplicity_matrix(a);
  const std::vector<int> mult_b = multiplicity_matrix(b);
  const DistanceMatrix dist_a = all_pairs_distances(a);
  const DistanceMatrix dist_b = all_pairs_distances(b);

  std::map<std::vector<int>, std::vector<int>> classes_b;
  for (int v = 0; v < n; ++v) classes_b[invariant_key(b, dist_b, mult_b, v)].push_back(v);

  std::vector<std::vector<int>> candidates(n);
  std::map<std::vector<int>, int> demand;
  for (int v = 0; v < n; ++v) {
    std::vector<int> key = invariant_key(a, dist_a, mult_a, v);
    auto it = classes_b.find(key);
    if (it == classes_b.end()) return result;  // no vertex of b matches
    candidates[v] = it->second;
    ++demand[key];
  }
  for (const auto& [key, count] : demand)
    if (static_cast<int>(classes_b[key].size()) != count) return result;

  // Assignment order: most-constrained first, preferring vertices adjacent to
  // ones already placed so the multiplicity checks bite early.
  std::vector<std::vector<int>> adjacency(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nbrs = a.out_neighbor_set(v);
    std::vector<int> in = a.in_neighbor_set(v);
    nbrs.insert(nbrs.end(), in.begin(), in.end());
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    adjacency[v] = std::move(nbrs);
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  std::vector<int> placed_neighbors(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] &&
           candidates[v].size() < candidates[best].size()))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (int w : adjacency[best]) ++placed_neighbors[w];
  }

  Search search{n,    mult_a,
                mult_b, candidates,
                order,  std::vector<int>(n, -1),
                std::vector<bool>(n, false),
                node_budget};
  if (search.run(0)) {
    IsoWitness witness{search.assigned};
    if (!verify_witness(a, b, witness)) {
      // Only verified bijections leave this function.
      result.status = IsoStatus::budget_exceeded;
      return result;
    }
    result.status = IsoStatus::isomorphic;
    result.witness = std::move(witness);
    return result;
  }
  if (search.exhausted) result.status = IsoStatus::budget_exceeded;
  return result;
}

}  // namespace liftline
