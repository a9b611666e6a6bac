#include "liftline/expansion.hpp"

#include <stdexcept>

namespace liftline {

namespace {

void validate_voltage(const Digraph& base, const VoltageAssignment& va) {
  if (static_cast<int>(va.volts.size()) != base.size())
    throw std::invalid_argument("voltage assignment must cover every arc");
  for (int x : va.volts)
    if (x < 0 || x >= va.group.order())
      throw std::invalid_argument("voltage element out of range");
}

FiberedDigraph build_fibered(const Digraph& base, const ExpansionSpec& spec,
                             const std::vector<std::string>& fiber_names,
                             std::string name) {
  const int n = base.order();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + spec.fiber_sizes[v];
  const int new_order = offset[n];

  FiberedDigraph out{Digraph(0, {}), {}, {}};
  std::vector<std::string> labels;
  labels.reserve(new_order);
  out.origin.reserve(new_order);
  out.fibers.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int x = 0; x < spec.fiber_sizes[v]; ++x) {
      out.origin.emplace_back(v, x);
      out.fibers[v].push_back(offset[v] + x);
      labels.push_back("(" + base.label(v) + "," + fiber_names[offset[v] + x] + ")");
    }
  }

  std::vector<Arc> arcs;
  for (int e = 0; e < base.size(); ++e) {
    const int u = base.tail(e);
    const int v = base.head(e);
    for (int x = 0; x < spec.fiber_sizes[u]; ++x)
      arcs.push_back({offset[u] + x, offset[v] + spec.arc_maps[e][x]});
  }
  out.graph = Digraph(new_order, std::move(arcs), std::move(labels), std::move(name));
  return out;
}

}  // namespace

FiberedDigraph expand(const Digraph& base, const ExpansionSpec& spec) {
  const int n = base.order();
  if (static_cast<int>(spec.fiber_sizes.size()) != n)
    throw std::invalid_argument("expand: one fiber size per base vertex required");
  if (static_cast<int>(spec.arc_maps.size()) != base.size())
    throw std::invalid_argument("expand: one arc map per base arc required");
  for (int v = 0; v < n; ++v)
    if (spec.fiber_sizes[v] < 1)
      throw std::invalid_argument("expand: fibers must be non-empty");
  for (int e = 0; e < base.size(); ++e) {
    if (static_cast<int>(spec.arc_maps[e].size()) != spec.fiber_sizes[base.tail(e)])
      throw std::invalid_argument("expand: arc map " + std::to_string(e) +
                                  " is not total on the tail fiber");
    for (int image : spec.arc_maps[e])
      if (image < 0 || image >= spec.fiber_sizes[base.head(e)])
        throw std::invalid_argument("expand: arc map " + std::to_string(e) +
                                    " leaves the head fiber");
  }

  std::vector<std::string> fiber_names;
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < spec.fiber_sizes[v]; ++x) fiber_names.push_back(std::to_string(x));
  return build_fibered(base, spec, fiber_names, "expand(" + base.name() + ")");
}

FiberedDigraph lift(const Digraph& base, const VoltageAssignment& va) {
  validate_voltage(base, va);
  const FiniteGroup& group = va.group;
  const int n = base.order();
  const int ord = group.order();

  ExpansionSpec spec;
  spec.fiber_sizes.assign(n, ord);
  spec.arc_maps.resize(base.size());
  for (int e = 0; e < base.size(); ++e) {
    spec.arc_maps[e].resize(ord);
    for (int g = 0; g < ord; ++g) spec.arc_maps[e][g] = group.compose(g, va.volts[e]);
  }

  std::vector<std::string> fiber_names;
  fiber_names.reserve(static_cast<size_t>(n) * ord);
  for (int v = 0; v < n; ++v)
    for (int g = 0; g < ord; ++g) fiber_names.push_back(group.element_name(g));
  return build_fibered(base, spec, fiber_names,
                       "lift(" + base.name() + "," + group.name() + ")");
}

Digraph cayley_digraph(const FiniteGroup& g, const std::vector<int>& generators) {
  if (generators.empty())
    throw std::invalid_argument("cayley_digraph: at least one generator required");
  for (int gen : generators)
    if (gen < 0 || gen >= g.order())
      throw std::invalid_argument("cayley_digraph: generator out of range");

  std::vector<std::string> labels;
  labels.reserve(g.order());
  for (int a = 0; a < g.order(); ++a) labels.push_back(g.element_name(a));

  std::vector<Arc> arcs;
  std::string gens;
  for (int gen : generators) {
    for (int a = 0; a < g.order(); ++a) arcs.push_back({a, g.compose(a, gen)});
    if (!gens.empty()) gens += ',';
    gens += g.element_name(gen);
  }
  return Digraph(g.order(), std::move(arcs), std::move(labels),
                 "Cay(" + g.name() + ",{" + gens + "})");
}

Digraph coset_digraph(const FiniteGroup& g, const Subgroup& h,
                      const std::vector<int>& generators) {
  if (generators.empty())
    throw std::invalid_argument("coset_digraph: at least one generator required");
  std::vector<std::vector<int>> blocks = right_cosets(g, h);
  const int b = static_cast<int>(blocks.size());
  std::vector<int> block_of(g.order());
  for (int i = 0; i < b; ++i)
    for (int x : blocks[i]) block_of[x] = i;

  std::vector<std::string> labels;
  labels.reserve(b);
  for (const std::vector<int>& block : blocks) {
    std::string lab = "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) lab += ',';
      lab += g.element_name(block[i]);
    }
    lab += '}';
    labels.push_back(std::move(lab));
  }

  std::vector<Arc> arcs;
  std::string gens;
  for (int gen : generators) {
    if (gen < 0 || gen >= g.order())
      throw std::invalid_argument("coset_digraph: generator out of range");
    for (int i = 0; i < b; ++i)
      arcs.push_back({i, block_of[g.compose(blocks[i][0], gen)]});
    if (!gens.empty()) gens += ',';
    gens += g.element_name(gen);
  }
  return Digraph(b, std::move(arcs), std::move(labels),
                 "Coset(" + g.name() + ",{" + gens + "})");
}

FiberedDigraph expanded_coset_digraph(const Digraph& base, const VoltageAssignment& va,
                                      const Subgroup& h) {
  validate_voltage(base, va);
  std::vector<std::vector<int>> blocks = right_cosets(va.group, h);
  const int b = static_cast<int>(blocks.size());
  std::vector<int> block_of(va.group.order());
  for (int i = 0; i < b; ++i)
    for (int x : blocks[i]) block_of[x] = i;

  ExpansionSpec spec;
  spec.fiber_sizes.assign(base.order(), b);
  spec.arc_maps.resize(base.size());
  for (int e = 0; e < base.size(); ++e) {
    spec.arc_maps[e].resize(b);
    for (int i = 0; i < b; ++i)
      spec.arc_maps[e][i] = block_of[va.group.compose(blocks[i][0], va.volts[e])];
  }

  std::vector<std::string> fiber_names;
  for (int v = 0; v < base.order(); ++v)
    for (int i = 0; i < b; ++i) fiber_names.push_back("H" + va.group.element_name(blocks[i][0]));
  return build_fibered(base, spec, fiber_names,
                       "expcoset(" + base.name() + "," + va.group.name() + ")");
}

}  // namespace liftline
