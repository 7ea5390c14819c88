#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specat/error.hpp"

namespace specat {

// Objects and morphisms are dense indices into their category's tables.
using Obj = int;
using Mor = int;
inline constexpr int kNone = -1;

class FiniteCategory;
using CatPtr = std::shared_ptr<const FiniteCategory>;

// A finite category given by explicit, total tables: every composable pair
// has a stored composite, so all laws are decidable by direct enumeration.
// Instances are immutable once built.
class FiniteCategory {
 public:
  std::string name;
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::vector<Obj> dom_;
  std::vector<Obj> cod_;
  std::vector<Mor> identity_;                // per object
  std::vector<std::vector<Mor>> comp_;       // comp_[g][f] = g∘f, kNone if not composable

  int num_objects() const { return static_cast<int>(object_names.size()); }
  int num_morphisms() const { return static_cast<int>(morphism_names.size()); }

  Obj dom(Mor m) const { return dom_[m]; }
  Obj cod(Mor m) const { return cod_[m]; }
  Mor identity(Obj a) const { return identity_[a]; }
  bool is_identity(Mor m) const { return identity_[dom_[m]] == m; }

  bool composable(Mor g, Mor f) const { return dom_[g] == cod_[f]; }
  Mor compose(Mor g, Mor f) const { return comp_[g][f]; }

  std::vector<Mor> hom(Obj a, Obj b) const;  // Mor(a, b), ascending

  std::optional<Obj> object_by_name(const std::string& n) const;
  std::optional<Mor> morphism_by_name(const std::string& n) const;

  bool same_tables(const FiniteCategory& other) const;  // names ignored
};

struct ValidationIssue {
  Errc code;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Mutable staging area for category data; build() runs the full law check.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name = "");

  Obj add_object(const std::string& name);
  // Identity morphisms are added automatically per object (named id_<object>).
  Mor add_morphism(const std::string& name, Obj dom, Obj cod);
  // Declares g∘f = h. Compositions with identities are implied.
  void set_compose(Mor g, Mor f, Mor h);

  Obj object(const std::string& name) const;
  Mor morphism(const std::string& name) const;
  int num_objects() const { return static_cast<int>(cat_.object_names.size()); }
  int num_morphisms() const { return static_cast<int>(cat_.morphism_names.size()); }
  Mor identity_of(Obj a) const { return cat_.identity_[a]; }
  Obj dom(Mor m) const { return cat_.dom_[m]; }
  Obj cod(Mor m) const { return cat_.cod_[m]; }

  CatPtr build(ValidationReport& report) const;
  CatPtr build_or_throw() const;

 private:
  FiniteCategory cat_;
  std::vector<std::vector<Mor>> declared_;  // staged composition entries
};

// A composition-closed part of a parent category. dom/cod of every included
// morphism are included, as are all identities of included objects.
struct Subcategory {
  CatPtr parent;
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;

  bool contains_object(Obj a) const;
  bool contains_morphism(Mor m) const;

  // Materializes the subcategory as a standalone category plus the index maps
  // back into the parent (object i of the result is obj_index[i] etc).
  struct Materialized {
    CatPtr cat;
    std::vector<Obj> obj_index;
    std::vector<Mor> mor_index;
  };
  Materialized materialize(const std::string& name) const;
};

// ---- structural primitives ----

CatPtr opposite(const CatPtr& c);

// Two-sided inverse of m, if any.
std::optional<Mor> inverse_of(const FiniteCategory& c, Mor m);
bool is_isomorphism(const FiniteCategory& c, Mor m);
bool objects_isomorphic(const FiniteCategory& c, Obj a, Obj b);

// Mor{a,b} = Mor(a,b) ∪ Mor(b,a); the noninv variant keeps non-invertible
// morphisms only.
std::vector<Mor> mor_brace(const FiniteCategory& c, Obj a, Obj b);
std::vector<Mor> mor_brace_noninv(const FiniteCategory& c, Obj a, Obj b);

// Finest partition of objects where a,b share a block when Mor{a,b} ≠ ∅.
std::vector<std::vector<Obj>> connected_components(const FiniteCategory& c);
bool is_connected(const FiniteCategory& c);

// The maximal connected groupoid in c containing e: objects reachable from e
// by isomorphisms, with all isomorphisms among them.
Subcategory groupoid_component(const CatPtr& c, Obj e);
// All maximal connected groupoids, indexed by least member object.
std::vector<Subcategory> maximal_groupoids(const CatPtr& c);

bool is_mono(const FiniteCategory& c, Mor m);  // global left-cancellation
bool is_initial_object(const FiniteCategory& c, Obj a);
// Non-initial objects whose monomorphisms from non-initial objects are all
// isomorphisms.
std::vector<Obj> minimal_objects(const FiniteCategory& c);

// Full subcategory on one representative per isomorphism class (least object
// name), plus the inclusion indices into c.
Subcategory skeleton(const CatPtr& c);

CatPtr dis(const std::vector<std::string>& elements);

bool is_preorder(const FiniteCategory& c);
bool is_order(const FiniteCategory& c);

}  // namespace specat
