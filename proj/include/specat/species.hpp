#pragma once

#include <utility>
#include <vector>

#include "specat/constructive.hpp"
#include "specat/order.hpp"

namespace specat {

// A structure species Σ = (E, S) on a base category X: an echelon functor
// E : X → Ord and a structure scheme S : X^≅ → Set with Dis∘S a subfunctor
// of E∘J. S is stored as the selected carrier elements; its action on
// isomorphisms is the restriction of E (forced by the subfunctor condition).
struct StructureSpecies {
  CatPtr base;
  std::vector<OrderedSet> E_obj;         // per object of X
  std::vector<std::vector<int>> E_mor;   // per morphism u: element map E(dom u) → E(cod u)
  std::vector<std::vector<int>> S;       // per object: selected element indices, ascending
};

ValidationReport validate_species(const StructureSpecies& sigma);

// φ : Σ → Σ' over the same base; phi[a] maps positions of S(a) to element
// indices of E'(a) lying in S'(a).
struct SpeciesMorphism {
  StructureSpecies source;
  StructureSpecies target;
  std::vector<std::vector<int>> phi;
};

ValidationReport validate_species_morphism(const SpeciesMorphism& phi);

// The realization F_Σ : Y_Σ → X with objects (a, T), T ∈ S(a), and
// Mor((a,T),(a',T')) = { u : a → a' | E(u)(T) ≤ T' }.
struct Realization {
  ConFunctor con;
  std::vector<std::pair<Obj, int>> objects;  // (a, position in S(a))
};

Realization realize(const StructureSpecies& sigma);

// F_φ : (a,T) ↦ (a, φ_a(T)), u ↦ u — the unique functor commuting over X.
FunctorData realize_morphism(const SpeciesMorphism& phi, const Realization& from,
                             const Realization& to);

// ---- powerset calculus on bitmask-coded subsets ----
//
// A subset of an n-element set is a bitmask in [0, 2^n); f is given by its
// value table of length n into the target set.

// P⁺(f) : P(T) → P(T'), U ↦ f(U).
std::vector<int> powerset_covariant(const std::vector<int>& f, int target_size);
// P⁻(f) : P(T') → P(T), U' ↦ f⁻¹(U').
std::vector<int> powerset_contravariant(const std::vector<int>& f, int target_size);

// All topologies on an n-element set, each coded as a bitmask of subsets
// (bit U set ⇔ subset-mask U belongs to the topology); ascending order.
std::vector<long long> topologies(int n);

// ---- topology species (Example-style demo) ----
//
// The base Z is a category whose objects carry finite sets and whose
// morphisms are read contravariantly: u : A → B carries a set map
// f_u : B_set → A_set.
struct SetMapCategory {
  CatPtr cat;
  std::vector<int> sizes;                // per object
  std::vector<std::vector<int>> op_map;  // per morphism u: table of f_u
};

ValidationReport validate_setmap_category(const SetMapCategory& z);

// Σ_top on Z: E = P⁺∘P⁻|_Z with carrier (P(P(T)), ⊆); S(T) = topologies on
// T. Rejects |T| > 3 with PayloadTooLarge.
StructureSpecies topology_species(const SetMapCategory& z);

}  // namespace specat
