#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specat/functor.hpp"

namespace specat {

// A functor Y → X with a verified constructivity certificate: faithfulness
// plus, for every object a of Y and every isomorphism u of X with domain
// F(a), the unique lift of u at a.
struct ConFunctor {
  FunctorData F;
  // lift[a][u] = the unique lift of iso u at a; kNone where u is not an iso
  // of X with domain F(a).
  std::vector<std::vector<Mor>> lift;

  const CatPtr& total() const { return F.source; }
  const CatPtr& base() const { return F.target; }
};

// Builds the certificate, or reports why F is not constructive
// (NotFaithful / LiftMissing / LiftNotUnique).
std::optional<ConFunctor> is_constructive(const FunctorData& F, ValidationReport* report = nullptr);
ConFunctor require_constructive(const FunctorData& F);

Mor lift_iso(const ConFunctor& F, Obj a, Mor u);

// Does F'' ∘ Φ = F' hold on the nose (Φ a morphism of functors over X)?
bool commutes_over_base(const FunctorData& phi, const FunctorData& from, const FunctorData& to);

// ---- hom-sets over X ----
//
// A morphism into a faithful functor over X is determined by its object map
// (the morphism map is forced and functoriality is automatic), so hom-sets
// are stored as object maps only.
using ObjMap = std::vector<Obj>;

std::vector<ObjMap> hom_over(const ConFunctor& from, const ConFunctor& to,
                             SearchBudget* budget = nullptr);
// Variant for arbitrary faithful functors over a shared base (no
// constructivity requirement).
std::vector<ObjMap> faithful_hom_over(const FunctorData& from, const FunctorData& to,
                                      SearchBudget* budget = nullptr);
// Expands an object map back into the full functor (target must be faithful).
FunctorData expand_over(const ConFunctor& from, const ConFunctor& to, const ObjMap& phi);
FunctorData faithful_expand_over(const FunctorData& from, const FunctorData& to,
                                 const ObjMap& phi);
ObjMap compose_obj_maps(const ObjMap& g, const ObjMap& f);

// ---- covers ----

// The universal cover of the maximal connected groupoid at e: objects are
// pairs (a, u) with u : e → a invertible; every hom-set is a singleton.
struct Cover {
  ConFunctor con;                            // Y_{G,e} → X (already pushed forward)
  Obj basepoint;                             // e in X
  std::vector<std::pair<Obj, Mor>> objects;  // (a, u) per total-category object

  int object_by_iso(Mor u) const;  // index of (cod u, u)
};

Cover point_cover(const CatPtr& X, Obj e);

// The cover over the materialized groupoid itself (F_{G,e} : Y_{G,e} → G).
Cover universal_cover(const Subcategory::Materialized& G, Obj e_in_G);

// Widens a constructive functor over a materialized maximal connected
// groupoid to one over the ambient category (ι_{G*}). Throws
// NotMaximalGroupoid unless G is a maximal connected groupoid in X.
ConFunctor pushforward_groupoid(const CatPtr& X, const Subcategory::Materialized& G,
                                const ConFunctor& F);

// Deck transformation Φ_w : cover at e → cover at e', (a,u) ↦ (a, u∘w⁻¹),
// for an invertible w : e → e'.
FunctorData deck(const Cover& from, const Cover& to, Mor w);

struct AutGroup {
  std::vector<Mor> elements;            // isomorphisms e → e in X, ascending
  std::vector<std::vector<int>> table;  // table[i][j] = index of elements[i]∘elements[j]
  std::vector<int> inverse;
};
AutGroup aut_group(const FiniteCategory& X, Obj e);

// Prop P014(i): hom(F_{G,e}, F) ↔ F⁻¹(e). `fiber` lists the total-category
// objects of F over e; morphisms[i] evaluates at (e, id_e) to fiber[i].
struct EvBijection {
  std::vector<ObjMap> morphisms;
  std::vector<Obj> fiber;
};
EvBijection ev(const Cover& cover, const ConFunctor& F);
// The inverse map of ev: builds Φ with Φ((e,id_e)) = y via unique lifts.
ObjMap ev_inverse(const Cover& cover, const ConFunctor& F, Obj y);

// ---- multicovers ----
//
// A disjoint union of point covers with optional one-way connecting
// morphisms. Bridges, self-bridges, coproducts of covers, and the bridge
// amalgams are all instances. Every nonempty hom-set is a singleton.
struct MultiCover {
  ConFunctor con;
  std::vector<Cover> parts;      // part-local covers (over X)
  std::vector<int> offset;       // object offset of each part in the total category
  std::vector<FunctorData> inj;  // inclusion of each part's cover
  // links[p][q] = the connecting morphism of X from basepoint(p) to
  // basepoint(q), or kNone when parts p, q are not connected.
  std::vector<std::vector<Mor>> links;
};

// Builds the multicover on the given basepoints with connecting morphisms.
// Each link (p, q, v) adds, for every object pair, the morphism with
// underlying u_q∘v∘u_p⁻¹. Links are closed under composition; conflicting or
// invertible induced links make the shape invalid and return nullopt.
std::optional<MultiCover> make_multicover(const CatPtr& X, const std::vector<Obj>& basepoints,
                                          const std::vector<std::tuple<int, int, Mor>>& links,
                                          const std::string& name);

// Coproduct of point covers (no links); always exists.
MultiCover cover_coproduct(const CatPtr& X, const std::vector<Obj>& basepoints,
                           const std::string& name);

// The bridge F⁺_{G,G',v} for non-invertible v, as a 2-part multicover with
// its inclusion Υ_v : cover(e) ⊔ cover(e') → Y_v. When e and e' are in the
// same groupoid component the bridge uses two distinct cover copies
// (the self-bridge for a non-invertible endomorphism).
struct BridgeData {
  MultiCover mc;  // parts: 0 = domain-side cover, 1 = codomain-side cover
  Mor v;
};
BridgeData make_bridge(const CatPtr& X, Obj e_dom, Obj e_cod, Mor v, const std::string& name);

// ---- generic constructions over X ----

struct Coproduct {
  ConFunctor value;
  FunctorData inj1, inj2;
};
Coproduct con_coproduct(const ConFunctor& F1, const ConFunctor& F2, const std::string& name);
ConFunctor con_empty(const CatPtr& X);

struct FiberProduct {
  ConFunctor value;
  FunctorData proj1, proj2;
};
// Pullback of Φ1 : F1 → F0 and Φ2 : F2 → F0 in Con_X.
FiberProduct con_fiber_product(const ConFunctor& F1, const ConFunctor& F2,
                               const ConFunctor& F0, const FunctorData& phi1,
                               const FunctorData& phi2);

// f^*(F) for f : X' → X: objects (y, x') with F(y) = f(x').
ConFunctor pullback_along(const FunctorData& f, const ConFunctor& F);

ConFunctor identity_con(const CatPtr& X);

}  // namespace specat
