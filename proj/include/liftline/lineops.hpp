#pragma once

#include <optional>
#include <vector>

#include "liftline/digraph.hpp"
#include "liftline/expansion.hpp"

namespace liftline {

/// Head-covering subset of arc indices: every vertex must be the head of at
/// least one kept arc, so n <= |arcs| <= m.
struct ArcSubset {
  std::vector<int> arcs;
};

/// Representative map for dropped arcs: rep[e] = e for kept arcs, and a kept
/// arc with the same head for every other arc.
struct ChoiceFunction {
  std::vector<int> rep;  // size m
};

/// Vertex-splitting blueprint: iota[v] copies per vertex (1 <= iota[v] <=
/// in-degree of v) and, per arc, the copy of its head it is routed into.
/// Every copy must receive at least one arc.
struct SplitSpec {
  std::vector<int> iota;
  std::vector<int> copy_of_arc;  // copy_of_arc[e] in 0..iota[head(e)]-1
};

/// Verdict of the voltage condition under which a lift of a line digraph is
/// again a line digraph. On failure, (u, v, x_i, x_j) is a pair of vertices
/// with a common out-class and two out-neighbors whose voltage offsets differ.
struct LineCondReport {
  bool holds = true;
  int u = -1;
  int v = -1;
  int x_i = -1;
  int x_j = -1;
};

/// Line digraph: one vertex per arc of g, an arc e -> f whenever
/// head(e) = tail(f). The output is always simple.
Digraph line_digraph(const Digraph& g);

/// Heuchenne's condition: every pair of vertices has equal or disjoint
/// out-neighbor sets. Characterizes line digraphs among simple digraphs;
/// parallel arcs yield false immediately (line digraphs are simple).
bool heuchenne_is_line(const Digraph& g);

enum class RootSearchStatus { found, none, budget_exceeded };

struct RootSearchResult {
  RootSearchStatus status = RootSearchStatus::none;
  std::optional<Digraph> root;  // present iff status == found
};

/// Exhaustive search for a digraph h with line_digraph(h) isomorphic to g,
/// over candidate roots with at most max_root_order vertices (none isolated)
/// and exactly order(g) arcs. Independent brute-force oracle for the
/// Heuchenne test; meant for very small g.
RootSearchResult line_root_search(const Digraph& g, int max_root_order,
                                  long long candidate_budget = 10'000'000);

/// Lowest-indexed kept arc with the same head, for every dropped arc.
ChoiceFunction default_choice(const Digraph& g, const ArcSubset& kept);

/// Partial line digraph on the kept arcs: from vertex e = (u, v), one arc to
/// rep(f) for every base arc f leaving v. Out-degree of e equals the base
/// out-degree of v.
Digraph partial_line_digraph(const Digraph& g, const ArcSubset& kept,
                             const ChoiceFunction& cf);

/// Split every vertex v into iota[v] copies; each base arc fans out from all
/// copies of its tail into the assigned copy of its head.
Digraph vertex_split(const Digraph& g, const SplitSpec& spec);

/// Split spec aligned with a partial line digraph instance: copies of v are
/// indexed by the kept arcs with head v (ascending), and each base arc is
/// routed into the copy indexed by its representative. Guarantees
/// vertex_split(g, result) isomorphic to partial_line_digraph(g, kept, cf).
SplitSpec matched_split_spec(const Digraph& g, const ArcSubset& kept,
                             const ChoiceFunction& cf);

/// Expansion view of the same construction: fiber of v = kept arcs with head
/// v, and every base arc's map is constant onto its representative.
ExpansionSpec plift_expansion_spec(const Digraph& g, const ArcSubset& kept,
                                   const ChoiceFunction& cf);

/// Checks, for every pair of vertices with a common out-neighbor set, that
/// the voltage offset volt(u->x) * volt(v->x)^-1 does not depend on x. When
/// the condition holds, the lift of g is again a line digraph. Requires g to
/// pass heuchenne_is_line.
LineCondReport lift_line_condition(const Digraph& g, const VoltageAssignment& va);

}  // namespace liftline
