#pragma once

#include <string>
#include <vector>

#include "specat/category.hpp"

namespace specat {

// A finite ordered set (reflexive, transitive, antisymmetric relation).
struct OrderedSet {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> le;  // le[i][j] ⇔ element i ≤ element j

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int i, int j) const { return le[i][j]; }
};

// Checks reflexivity, transitivity, antisymmetry; throws
// RelationNotReflexiveTransitive on failure.
void validate_order(const OrderedSet& o);

OrderedSet discrete_order(const std::vector<std::string>& elements);

// The category T^⊥: one morphism a → b precisely when a ≤ b.
CatPtr order_as_category(const OrderedSet& o, const std::string& name);

// Recovers the OrderedSet presented by an order category (validates is_order).
OrderedSet order_from_category(const FiniteCategory& c);

// A map between ordered sets given by element indices; monotone check.
bool is_monotone(const OrderedSet& src, const OrderedSet& dst, const std::vector<int>& map);

}  // namespace specat
