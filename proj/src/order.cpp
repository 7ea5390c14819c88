#include "specat/order.hpp"

namespace specat {

void validate_order(const OrderedSet& o) {
  int n = o.size();
  if ((int)o.le.size() != n)
    throw Error(Errc::RelationNotReflexiveTransitive, "relation arity mismatch");
  for (const auto& row : o.le)
    if ((int)row.size() != n)
      throw Error(Errc::RelationNotReflexiveTransitive, "relation arity mismatch");
  for (int i = 0; i < n; ++i)
    if (!o.le[i][i])
      throw Error(Errc::RelationNotReflexiveTransitive,
                  "relation not reflexive at " + o.elements[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && o.le[i][j] && o.le[j][i])
        throw Error(Errc::RelationNotReflexiveTransitive,
                    "relation not antisymmetric on (" + o.elements[i] + ", " + o.elements[j] + ")");
      if (!o.le[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (o.le[j][k] && !o.le[i][k])
          throw Error(Errc::RelationNotReflexiveTransitive,
                      "relation not transitive through " + o.elements[j]);
    }
}

OrderedSet discrete_order(const std::vector<std::string>& elements) {
  OrderedSet o;
  o.elements = elements;
  int n = o.size();
  o.le.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) o.le[i][i] = true;
  return o;
}

CatPtr order_as_category(const OrderedSet& o, const std::string& name) {
  validate_order(o);
  CategoryBuilder b(name);
  for (const auto& e : o.elements) b.add_object(e);
  int n = o.size();
  std::vector<std::vector<Mor>> arrow(n, std::vector<Mor>(n, kNone));
  for (int i = 0; i < n; ++i) {
    arrow[i][i] = b.identity_of(i);
    for (int j = 0; j < n; ++j)
      if (i != j && o.le[i][j])
        arrow[i][j] = b.add_morphism("le_" + o.elements[i] + "_" + o.elements[j], i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (arrow[i][j] == kNone || i == j) continue;
      for (int k = 0; k < n; ++k)
        if (arrow[j][k] != kNone && j != k)
          b.set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
    }
  return b.build_or_throw();
}

OrderedSet order_from_category(const FiniteCategory& c) {
  if (!is_order(c))
    throw Error(Errc::RelationNotReflexiveTransitive, "category is not an order");
  OrderedSet o;
  o.elements = c.object_names;
  int n = c.num_objects();
  o.le.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!c.hom(i, j).empty()) o.le[i][j] = true;
  return o;
}

bool is_monotone(const OrderedSet& src, const OrderedSet& dst, const std::vector<int>& map) {
  int n = src.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (src.le[i][j] && !dst.le[map[i]][map[j]]) return false;
  return true;
}

}  // namespace specat
