#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "specat/category.hpp"

namespace specat {

// A functor between finite categories, stored as total index maps.
struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<Obj> obj_map;
  std::vector<Mor> mor_map;

  Obj on_obj(Obj a) const { return obj_map[a]; }
  Mor on_mor(Mor m) const { return mor_map[m]; }

  bool operator==(const FunctorData& o) const {
    return source == o.source && target == o.target && obj_map == o.obj_map &&
           mor_map == o.mor_map;
  }
};

struct NaturalTransformationData {
  FunctorData source;  // parallel functors
  FunctorData target;
  std::vector<Mor> components;  // per source object, a morphism of the target category
};

// Exhaustive functor-law check; issues name the offending pair.
ValidationReport validate_functor(const FunctorData& f);
bool is_valid_functor(const FunctorData& f);

ValidationReport validate_natural_transformation(const NaturalTransformationData& t);

FunctorData identity_functor(const CatPtr& c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);  // g∘f

bool is_faithful(const FunctorData& f);
bool is_full(const FunctorData& f);
bool is_injective_on_objects(const FunctorData& f);

// Same maps interpreted against the supplied opposite categories (which must
// share the originals' object/morphism indexing, as produced by opposite()).
FunctorData op_functor(const FunctorData& f, const CatPtr& source_op, const CatPtr& target_op);

// Backtracking search for an isomorphism of categories, pruned by hom-degree
// profiles; deterministic first witness. Throws SearchBudgetExceeded.
std::optional<FunctorData> find_isomorphism(const CatPtr& c, const CatPtr& d,
                                            SearchBudget* budget = nullptr);

struct EquivalenceWitness {
  bool equivalent = false;
  // Isomorphism between the skeletons when equivalent.
  std::optional<FunctorData> skeleton_iso;
};
EquivalenceWitness are_equivalent(const CatPtr& c, const CatPtr& d,
                                  SearchBudget* budget = nullptr);

// Calls sink for every functor c → d, in a deterministic order; sink may
// return false to stop early. Returns the number of functors visited.
long long enumerate_functors(const CatPtr& c, const CatPtr& d,
                             const std::function<bool(const FunctorData&)>& sink,
                             SearchBudget* budget = nullptr);
std::vector<FunctorData> all_functors(const CatPtr& c, const CatPtr& d,
                                      SearchBudget* budget = nullptr);

}  // namespace specat
