#include "liftline/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "liftline/iso.hpp"
#include "liftline/lineops.hpp"

namespace liftline {

void validate_partition(const Partition& p, int order) {
  std::vector<bool> seen(order, false);
  int covered = 0;
  for (const std::vector<int>& block : p.blocks) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    for (int v : block) {
      if (v < 0 || v >= order)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " out of range");
      if (seen[v])
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " appears in two blocks");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != order)
    throw std::invalid_argument("partition: blocks do not cover every vertex");
}

std::vector<int> block_index(const Partition& p, int order) {
  std::vector<int> idx(order, -1);
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (int v : p.blocks[i]) idx[v] = static_cast<int>(i);
  return idx;
}

RegularityCheck check_regular(const Digraph& g, const Partition& p) {
  validate_partition(p, g.order());
  const int b = static_cast<int>(p.blocks.size());
  std::vector<int> block_of = block_index(p, g.order());

  RegularityCheck result;
  std::vector<int> entries(static_cast<size_t>(b) * b, 0);
  std::vector<int> row(b), first_row(b);
  for (int i = 0; i < b; ++i) {
    for (size_t k = 0; k < p.blocks[i].size(); ++k) {
      int u = p.blocks[i][k];
      std::fill(row.begin(), row.end(), 0);
      for (int e : g.out_arcs(u)) ++row[block_of[g.head(e)]];
      if (k == 0) {
        first_row = row;
      } else if (row != first_row) {
        result.witness_u = p.blocks[i][0];
        result.witness_v = u;
        return result;
      }
    }
    std::copy(first_row.begin(), first_row.end(),
              entries.begin() + static_cast<size_t>(i) * b);
  }
  result.matrix = IntersectionMatrix(b, std::move(entries));
  return result;
}

Digraph quotient(const Digraph& g, const Partition& p) {
  RegularityCheck check = check_regular(g, p);
  if (!check.regular())
    throw std::invalid_argument("quotient: partition is not regular (vertices " +
                                std::to_string(check.witness_u) + " and " +
                                std::to_string(check.witness_v) + " disagree)");
  const int b = static_cast<int>(p.blocks.size());
  std::vector<std::string> labels;
  labels.reserve(b);
  for (const std::vector<int>& block : p.blocks) {
    std::string lab = "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) lab += ',';
      lab += g.label(block[i]);
    }
    lab += '}';
    labels.push_back(std::move(lab));
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      for (int c = 0; c < check.matrix->at(i, j); ++c) arcs.push_back({i, j});
  return Digraph(b, std::move(arcs), std::move(labels), "quot(" + g.name() + ")");
}

Partition induced_arc_partition(const Digraph& g, const Partition& p) {
  RegularityCheck check = check_regular(g, p);
  if (!check.regular())
    throw std::invalid_argument("induced_arc_partition: partition is not regular");
  const int b = static_cast<int>(p.blocks.size());
  std::vector<int> block_of = block_index(p, g.order());

  Partition out;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      std::vector<int> block;
      for (int e = 0; e < g.size(); ++e)
        if (block_of[g.tail(e)] == i && block_of[g.head(e)] == j) block.push_back(e);
      if (!block.empty()) out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

bool verify_commutation(const Digraph& g, const Partition& p) {
  Digraph lhs = line_digraph(quotient(g, p));
  Digraph lg = line_digraph(g);
  Partition induced = induced_arc_partition(g, p);
  if (!check_regular(lg, induced).regular()) return false;
  Digraph rhs = quotient(lg, induced);
  return is_isomorphic(lhs, rhs).ok();
}

}  // namespace liftline
