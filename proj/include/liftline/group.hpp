#pragma once

#include <string>
#include <vector>

namespace liftline {

/// Finite group over element indices 0..order-1, backed by a full composition
/// table. Concrete constructors: cyclic groups and finite direct products.
/// Immutable and cheap to copy around by value at the orders this project
/// uses.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int compose(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }

  /// Rendering of one element: "3" for cyclic, "1,2" for products.
  const std::string& element_name(int a) const { return element_names_[a]; }
  const std::string& name() const { return name_; }

  /// Number of direct factors (1 for cyclic groups); component orders.
  const std::vector<int>& factor_orders() const { return factor_orders_; }

  friend FiniteGroup cyclic_group(int n);
  friend FiniteGroup product_group(const std::vector<FiniteGroup>& factors);

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;    // row-major composition
  std::vector<int> inverse_;
  std::vector<std::string> element_names_;
  std::string name_;
  std::vector<int> factor_orders_;
};

/// Z_n under addition; identity 0, inverse = negation mod n.
FiniteGroup cyclic_group(int n);

/// Direct product with componentwise composition. Element indices are the
/// mixed-radix encoding of component tuples, last factor fastest.
FiniteGroup product_group(const std::vector<FiniteGroup>& factors);

struct Subgroup {
  std::vector<int> elements;
};

/// Contains the identity, closed under composition and inverse.
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);

/// Right cosets Hg, each block sorted, blocks ordered by smallest member.
/// Throws std::invalid_argument when h is not a subgroup.
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h);

}  // namespace liftline
