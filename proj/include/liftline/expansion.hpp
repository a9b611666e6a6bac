#pragma once

#include <utility>
#include <vector>

#include "liftline/digraph.hpp"
#include "liftline/group.hpp"

namespace liftline {

/// Blueprint of an expanded digraph: a fiber per base vertex and, per base
/// arc, a total map from the tail's fiber to the head's fiber.
struct ExpansionSpec {
  std::vector<int> fiber_sizes;            // per base vertex
  std::vector<std::vector<int>> arc_maps;  // arc_maps[e][x] = image in the head fiber
};

/// A full arc labelling by elements of one finite group.
struct VoltageAssignment {
  FiniteGroup group;
  std::vector<int> volts;  // per base arc
};

/// Result of an expansion or a lift: the new digraph plus the projection back
/// to the base. New vertices are numbered lexicographically by (base vertex,
/// fiber element), so fibers are contiguous index ranges.
struct FiberedDigraph {
  Digraph graph;
  std::vector<std::pair<int, int>> origin;  // new vertex -> (base vertex, fiber element)
  std::vector<std::vector<int>> fibers;     // base vertex -> new vertices, ascending
};

/// Expanded digraph: each base vertex v becomes its fiber, each base arc
/// e = (u, v) contributes one arc x -> arc_maps[e][x] per element x of the
/// tail fiber. Arcs are emitted base-arc-major, fiber element ascending.
FiberedDigraph expand(const Digraph& base, const ExpansionSpec& spec);

/// Lift of a voltage digraph: vertices (v, g), arcs (u, g) -> (v, g*volt(e))
/// for every base arc e = (u, v) and group element g. Coincides arc-for-arc
/// with expand() where every fiber is the group and every map is right
/// translation by the arc's voltage.
FiberedDigraph lift(const Digraph& base, const VoltageAssignment& va);

/// Cayley digraph: one vertex per group element, one arc h -> h*gen per
/// generator. Repeated generators give parallel arcs. Arcs are emitted
/// generator-major, element ascending.
Digraph cayley_digraph(const FiniteGroup& g, const std::vector<int>& generators);

/// Coset digraph on right cosets Hg, one arc Hg -> Hg*gen per coset per
/// generator. Throws when h is not a subgroup.
Digraph coset_digraph(const FiniteGroup& g, const Subgroup& h,
                      const std::vector<int>& generators);

/// Expansion whose fibers are the right cosets of h and whose arc maps send
/// Hx to Hx*volt(e).
FiberedDigraph expanded_coset_digraph(const Digraph& base, const VoltageAssignment& va,
                                      const Subgroup& h);

}  // namespace liftline
