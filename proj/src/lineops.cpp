#include "liftline/lineops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "liftline/iso.hpp"

namespace liftline {

namespace {

std::string arc_label(const Digraph& g, int e) {
  return g.label(g.tail(e)) + ">" + g.label(g.head(e));
}

void validate_subset(const Digraph& g, const ArcSubset& kept) {
  std::vector<bool> in_subset(g.size(), false);
  for (int e : kept.arcs) {
    if (e < 0 || e >= g.size())
      throw std::invalid_argument("arc subset: arc index out of range");
    if (in_subset[e]) throw std::invalid_argument("arc subset: duplicate arc index");
    in_subset[e] = true;
  }
  std::vector<bool> covered(g.order(), false);
  for (int e : kept.arcs) covered[g.head(e)] = true;
  for (int v = 0; v < g.order(); ++v)
    if (!covered[v])
      throw std::invalid_argument("arc subset: no kept arc has head " +
                                  std::to_string(v) + " (head coverage violated)");
}

void validate_choice(const Digraph& g, const ArcSubset& kept, const ChoiceFunction& cf) {
  if (static_cast<int>(cf.rep.size()) != g.size())
    throw std::invalid_argument("choice function: one representative per arc required");
  std::vector<bool> in_subset(g.size(), false);
  for (int e : kept.arcs) in_subset[e] = true;
  for (int e = 0; e < g.size(); ++e) {
    int r = cf.rep[e];
    if (r < 0 || r >= g.size() || !in_subset[r])
      throw std::invalid_argument("choice function: representative of arc " +
                                  std::to_string(e) + " is not a kept arc");
    if (in_subset[e] && r != e)
      throw std::invalid_argument("choice function: kept arcs must represent themselves");
    if (g.head(r) != g.head(e))
      throw std::invalid_argument("choice function: representative of arc " +
                                  std::to_string(e) + " changes the head");
  }
}

void validate_split(const Digraph& g, const SplitSpec& spec) {
  if (static_cast<int>(spec.iota.size()) != g.order())
    throw std::invalid_argument("split spec: one copy count per vertex required");
  if (static_cast<int>(spec.copy_of_arc.size()) != g.size())
    throw std::invalid_argument("split spec: one copy assignment per arc required");
  for (int v = 0; v < g.order(); ++v)
    if (spec.iota[v] < 1 || spec.iota[v] > g.in_degree(v))
      throw std::invalid_argument("split spec: iota(" + std::to_string(v) +
                                  ") must be between 1 and the in-degree");
  std::vector<std::vector<bool>> hit(g.order());
  for (int v = 0; v < g.order(); ++v) hit[v].assign(spec.iota[v], false);
  for (int e = 0; e < g.size(); ++e) {
    int w = g.head(e);
    int c = spec.copy_of_arc[e];
    if (c < 0 || c >= spec.iota[w])
      throw std::invalid_argument("split spec: arc " + std::to_string(e) +
                                  " assigned to a copy out of range");
    hit[w][c] = true;
  }
  for (int v = 0; v < g.order(); ++v)
    for (int c = 0; c < spec.iota[v]; ++c)
      if (!hit[v][c])
        throw std::invalid_argument("split spec: copy " + std::to_string(c) +
                                    " of vertex " + std::to_string(v) +
                                    " would have zero in-degree");
}

}  // namespace

Digraph line_digraph(const Digraph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) labels.push_back(arc_label(g, e));
  std::vector<Arc> arcs;
  for (int e = 0; e < g.size(); ++e)
    for (int f : g.out_arcs(g.head(e))) arcs.push_back({e, f});
  return Digraph(g.size(), std::move(arcs), std::move(labels), "L(" + g.name() + ")");
}

bool heuchenne_is_line(const Digraph& g) {
  if (g.has_parallel_arcs()) return false;
  std::vector<std::vector<int>> out_sets(g.order());
  for (int v = 0; v < g.order(); ++v) out_sets[v] = g.out_neighbor_set(v);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (out_sets[u] == out_sets[v]) continue;
      bool disjoint = true;
      for (int x : out_sets[u]) {
        if (std::binary_search(out_sets[v].begin(), out_sets[v].end(), x)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) return false;
    }
  }
  return true;
}

RootSearchResult line_root_search(const Digraph& g, int max_root_order,
                                  long long candidate_budget) {
  RootSearchResult result;
  if (g.has_parallel_arcs()) return result;  // line digraphs are simple
  const int q = g.order();  // arcs of any root
  if (q == 0) {
    result.status = RootSearchStatus::found;
    result.root = Digraph(0, {});
    return result;
  }

  // A root without isolated vertices has at most 2q vertices, so the scan
  // over r <= min(max_root_order, 2q) is exhaustive for existence.
  const int r_max = std::min(max_root_order, 2 * q);
  std::vector<int> pick(q, 0);  // nondecreasing pair codes: multiset of arcs
  for (int r = 1; r <= r_max; ++r) {
    const int pairs = r * r;
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      if (--candidate_budget < 0) {
        result.status = RootSearchStatus::budget_exceeded;
        return result;
      }
      // Degree-based filters before building anything.
      std::vector<int> din(r, 0), dout(r, 0);
      for (int code : pick) {
        ++dout[code / r];
        ++din[code % r];
      }
      bool covered = true;
      for (int v = 0; v < r; ++v) covered &= (din[v] + dout[v]) > 0;
      long long line_size = 0;
      for (int v = 0; v < r; ++v) line_size += static_cast<long long>(din[v]) * dout[v];
      if (covered && line_size == g.size()) {
        std::vector<Arc> arcs;
        arcs.reserve(q);
        for (int code : pick) arcs.push_back({code / r, code % r});
        Digraph candidate(r, std::move(arcs));
        if (is_isomorphic(line_digraph(candidate), g).ok()) {
          result.status = RootSearchStatus::found;
          result.root = std::move(candidate);
          return result;
        }
      }
      // Next nondecreasing sequence over 0..pairs-1.
      int i = q - 1;
      while (i >= 0 && pick[i] == pairs - 1) --i;
      if (i < 0) break;
      int next = pick[i] + 1;
      for (int j = i; j < q; ++j) pick[j] = next;
    }
  }
  return result;
}

ChoiceFunction default_choice(const Digraph& g, const ArcSubset& kept) {
  validate_subset(g, kept);
  std::vector<bool> in_subset(g.size(), false);
  for (int e : kept.arcs) in_subset[e] = true;
  std::vector<int> lowest(g.order(), -1);
  for (int v = 0; v < g.order(); ++v)
    for (int e : g.in_arcs(v))
      if (in_subset[e]) {
        lowest[v] = e;
        break;
      }
  ChoiceFunction cf;
  cf.rep.resize(g.size());
  for (int e = 0; e < g.size(); ++e) cf.rep[e] = in_subset[e] ? e : lowest[g.head(e)];
  return cf;
}

Digraph partial_line_digraph(const Digraph& g, const ArcSubset& kept,
                             const ChoiceFunction& cf) {
  validate_subset(g, kept);
  validate_choice(g, kept, cf);
  std::vector<int> sorted = kept.arcs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> vertex_of_arc(g.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) vertex_of_arc[sorted[i]] = static_cast<int>(i);

  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (int e : sorted) labels.push_back(arc_label(g, e));

  std::vector<Arc> arcs;
  for (size_t i = 0; i < sorted.size(); ++i) {
    int v = g.head(sorted[i]);
    for (int f : g.out_arcs(v))
      arcs.push_back({static_cast<int>(i), vertex_of_arc[cf.rep[f]]});
  }
  return Digraph(static_cast<int>(sorted.size()), std::move(arcs), std::move(labels),
                 "Lmu(" + g.name() + ")");
}

Digraph vertex_split(const Digraph& g, const SplitSpec& spec) {
  validate_split(g, spec);
  std::vector<int> offset(g.order() + 1, 0);
  for (int v = 0; v < g.order(); ++v) offset[v + 1] = offset[v] + spec.iota[v];

  std::vector<std::string> labels;
  labels.reserve(offset[g.order()]);
  for (int v = 0; v < g.order(); ++v)
    for (int c = 0; c < spec.iota[v]; ++c)
      labels.push_back("(" + g.label(v) + "," + std::to_string(c) + ")");

  std::vector<Arc> arcs;
  for (int e = 0; e < g.size(); ++e) {
    int v = g.tail(e);
    int target = offset[g.head(e)] + spec.copy_of_arc[e];
    for (int c = 0; c < spec.iota[v]; ++c) arcs.push_back({offset[v] + c, target});
  }
  return Digraph(offset[g.order()], std::move(arcs), std::move(labels),
                 "S(" + g.name() + ")");
}

SplitSpec matched_split_spec(const Digraph& g, const ArcSubset& kept,
                             const ChoiceFunction& cf) {
  validate_subset(g, kept);
  validate_choice(g, kept, cf);
  // Copies of v are the kept arcs with head v, in ascending arc order.
  std::vector<std::vector<int>> copies(g.order());
  std::vector<int> sorted = kept.arcs;
  std::sort(sorted.begin(), sorted.end());
  for (int e : sorted) copies[g.head(e)].push_back(e);

  SplitSpec spec;
  spec.iota.resize(g.order());
  for (int v = 0; v < g.order(); ++v) spec.iota[v] = static_cast<int>(copies[v].size());
  spec.copy_of_arc.resize(g.size());
  for (int e = 0; e < g.size(); ++e) {
    const std::vector<int>& at_head = copies[g.head(e)];
    int rep = cf.rep[e];
    spec.copy_of_arc[e] = static_cast<int>(
        std::lower_bound(at_head.begin(), at_head.end(), rep) - at_head.begin());
  }
  return spec;
}

ExpansionSpec plift_expansion_spec(const Digraph& g, const ArcSubset& kept,
                                   const ChoiceFunction& cf) {
  SplitSpec split = matched_split_spec(g, kept, cf);
  ExpansionSpec spec;
  spec.fiber_sizes = split.iota;
  spec.arc_maps.resize(g.size());
  for (int e = 0; e < g.size(); ++e)
    spec.arc_maps[e].assign(split.iota[g.tail(e)], split.copy_of_arc[e]);
  return spec;
}

LineCondReport lift_line_condition(const Digraph& g, const VoltageAssignment& va) {
  if (!heuchenne_is_line(g))
    throw std::invalid_argument("lift_line_condition: digraph is not a line digraph");
  if (static_cast<int>(va.volts.size()) != g.size())
    throw std::invalid_argument("lift_line_condition: voltage must cover every arc");

  // g is simple here, so (v, x) identifies the arc v -> x.
  std::map<std::pair<int, int>, int> arc_of;
  for (int e = 0; e < g.size(); ++e) arc_of[{g.tail(e), g.head(e)}] = e;

  std::map<std::vector<int>, std::vector<int>> out_classes;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nbrs = g.out_neighbor_set(v);
    if (!nbrs.empty()) out_classes[std::move(nbrs)].push_back(v);
  }

  const FiniteGroup& group = va.group;
  for (const auto& [nbrs, members] : out_classes) {
    int u = members[0];
    for (size_t i = 1; i < members.size(); ++i) {
      int v = members[i];
      int first = -1;
      for (size_t j = 0; j < nbrs.size(); ++j) {
        int x = nbrs[j];
        int offset = group.compose(va.volts[arc_of.at({u, x})],
                                   group.inverse(va.volts[arc_of.at({v, x})]));
        if (j == 0) {
          first = offset;
        } else if (offset != first) {
          return LineCondReport{false, u, v, nbrs[0], x};
        }
      }
    }
  }
  return LineCondReport{};
}

}  // namespace liftline
