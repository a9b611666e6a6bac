#pragma once

#include <optional>
#include <vector>

#include "liftline/digraph.hpp"

namespace liftline {

/// Vertex bijection witnessing an isomorphism: map[u] is the image of u.
struct IsoWitness {
  std::vector<int> map;
};

enum class IsoStatus { isomorphic, not_isomorphic, budget_exceeded };

struct IsoResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  std::optional<IsoWitness> witness;  // present iff status == isomorphic
  bool ok() const { return status == IsoStatus::isomorphic; }
};

inline constexpr long long kDefaultIsoBudget = 20'000'000;

/// Exact, multiplicity-aware digraph isomorphism.
///
/// Backtracking search, pruned by per-vertex invariants (in-degree,
/// out-degree, loop count, sorted distance profiles) with deterministic
/// candidate ordering. Returned witnesses are re-verified against the full
/// multiplicity matrices before being handed out. The node budget bounds
/// assignment attempts; exceeding it is reported distinctly from a negative
/// answer.
IsoResult is_isomorphic(const Digraph& a, const Digraph& b,
                        long long node_budget = kDefaultIsoBudget);

/// True when witness maps a onto b preserving all arc multiplicities.
bool verify_witness(const Digraph& a, const Digraph& b, const IsoWitness& witness);

}  // namespace liftline
