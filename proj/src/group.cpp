#include "liftline/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liftline {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.order_ = n;
  g.identity_ = 0;
  g.table_.resize(static_cast<size_t>(n) * n);
  g.inverse_.resize(n);
  g.element_names_.reserve(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table_[static_cast<size_t>(a) * n + b] = (a + b) % n;
    g.inverse_[a] = (n - a) % n;
    g.element_names_.push_back(std::to_string(a));
  }
  g.name_ = "Z" + std::to_string(n);
  g.factor_orders_ = {n};
  return g;
}

FiniteGroup product_group(const std::vector<FiniteGroup>& factors) {
  if (factors.empty())
    throw std::invalid_argument("product_group: at least one factor required");
  if (factors.size() == 1) return factors[0];

  long long order = 1;
  for (const FiniteGroup& f : factors) order *= f.order();
  if (order > 1 << 20)
    throw std::invalid_argument("product_group: order too large for a table");
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(factors.size());

  auto decode = [&](int idx) {
    std::vector<int> comps(k);
    for (int i = k - 1; i >= 0; --i) {
      comps[i] = idx % factors[i].order();
      idx /= factors[i].order();
    }
    return comps;
  };
  auto encode = [&](const std::vector<int>& comps) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i].order() + comps[i];
    return idx;
  };

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = 0;
  g.table_.resize(static_cast<size_t>(n) * n);
  g.inverse_.resize(n);
  g.element_names_.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> ca = decode(a);
    for (int b = 0; b < n; ++b) {
      std::vector<int> cb = decode(b);
      std::vector<int> cc(k);
      for (int i = 0; i < k; ++i) cc[i] = factors[i].compose(ca[i], cb[i]);
      g.table_[static_cast<size_t>(a) * n + b] = encode(cc);
    }
    std::vector<int> inv(k);
    for (int i = 0; i < k; ++i) inv[i] = factors[i].inverse(ca[i]);
    g.inverse_[a] = encode(inv);
    std::string name;
    for (int i = 0; i < k; ++i) {
      if (i) name += ',';
      name += factors[i].element_name(ca[i]);
    }
    g.element_names_.push_back(std::move(name));
  }
  for (int i = 0; i < k; ++i) {
    if (i) g.name_ += 'x';
    g.name_ += factors[i].name();
    g.factor_orders_.insert(g.factor_orders_.end(), factors[i].factor_orders().begin(),
                            factors[i].factor_orders().end());
  }
  return g;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty()) return false;
  std::set<int> members;
  for (int a : h.elements) {
    if (a < 0 || a >= g.order()) return false;
    members.insert(a);
  }
  if (members.count(g.identity()) == 0) return false;
  for (int a : members) {
    if (members.count(g.inverse(a)) == 0) return false;
    for (int b : members)
      if (members.count(g.compose(a, b)) == 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h))
    throw std::invalid_argument("right_cosets: not a subgroup of the given group");
  std::vector<std::vector<int>> blocks;
  std::vector<bool> seen(g.order(), false);
  for (int rep = 0; rep < g.order(); ++rep) {
    if (seen[rep]) continue;
    std::vector<int> block;
    for (int a : h.elements) {
      int x = g.compose(a, rep);  // Hg = {hg : h in H}
      if (!seen[x]) {
        seen[x] = true;
        block.push_back(x);
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace liftline
