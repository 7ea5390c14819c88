#include "specat/species.hpp"

#include <algorithm>
#include <string>

namespace specat {

namespace {

bool in_S(const StructureSpecies& s, Obj a, int elem) {
  return std::binary_search(s.S[a].begin(), s.S[a].end(), elem);
}

}  // namespace

ValidationReport validate_species(const StructureSpecies& sigma) {
  ValidationReport r;
  const FiniteCategory& X = *sigma.base;
  if ((int)sigma.E_obj.size() != X.num_objects() ||
      (int)sigma.E_mor.size() != X.num_morphisms() || (int)sigma.S.size() != X.num_objects()) {
    r.issues.push_back({Errc::FunctorLawViolation, "species table arity mismatch"});
    return r;
  }
  for (Obj a = 0; a < X.num_objects(); ++a) {
    try {
      validate_order(sigma.E_obj[a]);
    } catch (const Error& e) {
      r.issues.push_back({e.code(), std::string("E(") + X.object_names[a] + "): " + e.what()});
      return r;
    }
  }
  // E is a functor into Ord: well-typed monotone maps, identities, composition.
  for (Mor u = 0; u < X.num_morphisms(); ++u) {
    const OrderedSet& src = sigma.E_obj[X.dom(u)];
    const OrderedSet& dst = sigma.E_obj[X.cod(u)];
    const auto& f = sigma.E_mor[u];
    if ((int)f.size() != src.size() ||
        std::any_of(f.begin(), f.end(), [&](int v) { return v < 0 || v >= dst.size(); })) {
      r.issues.push_back({Errc::FunctorLawViolation,
                          "E(" + X.morphism_names[u] + ") is not a well-typed map"});
      return r;
    }
    if (!is_monotone(src, dst, f))
      r.issues.push_back({Errc::FunctorLawViolation,
                          "E(" + X.morphism_names[u] + ") is not monotone"});
  }
  for (Obj a = 0; a < X.num_objects(); ++a)
    for (int i = 0; i < sigma.E_obj[a].size(); ++i)
      if (sigma.E_mor[X.identity(a)][i] != i) {
        r.issues.push_back({Errc::FunctorLawViolation,
                            "E(id_" + X.object_names[a] + ") is not the identity"});
        break;
      }
  for (Mor g = 0; g < X.num_morphisms(); ++g)
    for (Mor f = 0; f < X.num_morphisms(); ++f) {
      if (!X.composable(g, f)) continue;
      const auto& gm = sigma.E_mor[g];
      const auto& fm = sigma.E_mor[f];
      const auto& hm = sigma.E_mor[X.compose(g, f)];
      for (size_t i = 0; i < fm.size(); ++i)
        if (hm[i] != gm[fm[i]]) {
          r.issues.push_back({Errc::FunctorLawViolation,
                              "E does not preserve " + X.morphism_names[g] + "∘" +
                                  X.morphism_names[f]});
          goto next_pair;
        }
    next_pair:;
    }
  if (!r.ok()) return r;
  // Subfunctor condition: S(a) lies in the carrier of E(a) and every
  // isomorphism restricts to a bijection S(a) → S(b).
  for (Obj a = 0; a < X.num_objects(); ++a) {
    for (size_t i = 0; i < sigma.S[a].size(); ++i) {
      int e = sigma.S[a][i];
      if (e < 0 || e >= sigma.E_obj[a].size() || (i > 0 && sigma.S[a][i - 1] >= e)) {
        r.issues.push_back({Errc::SubfunctorViolation,
                            "S(" + X.object_names[a] + ") is not an ascending subset of E(" +
                                X.object_names[a] + ")"});
        return r;
      }
    }
  }
  for (Mor u = 0; u < X.num_morphisms(); ++u) {
    if (!is_isomorphism(*sigma.base, u)) continue;
    Obj a = X.dom(u), b = X.cod(u);
    std::vector<int> image;
    for (int e : sigma.S[a]) {
      if (!in_S(sigma, b, sigma.E_mor[u][e])) {
        r.issues.push_back({Errc::SubfunctorViolation,
                            "E(" + X.morphism_names[u] + ") does not carry S(" +
                                X.object_names[a] + ") into S(" + X.object_names[b] + ")"});
        return r;
      }
      image.push_back(sigma.E_mor[u][e]);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end() ||
        image.size() != sigma.S[b].size())
      r.issues.push_back({Errc::SubfunctorViolation,
                          "S(" + X.morphism_names[u] + ") is not bijective"});
  }
  return r;
}

ValidationReport validate_species_morphism(const SpeciesMorphism& phi) {
  ValidationReport r;
  const StructureSpecies& s = phi.source;
  const StructureSpecies& t = phi.target;
  if (s.base != t.base) {
    r.issues.push_back({Errc::DomainMismatch, "species over different bases"});
    return r;
  }
  const FiniteCategory& X = *s.base;
  if ((int)phi.phi.size() != X.num_objects()) {
    r.issues.push_back({Errc::FunctorLawViolation, "component arity mismatch"});
    return r;
  }
  for (Obj a = 0; a < X.num_objects(); ++a) {
    if (phi.phi[a].size() != s.S[a].size()) {
      r.issues.push_back({Errc::FunctorLawViolation,
                          "component at " + X.object_names[a] + " has wrong arity"});
      return r;
    }
    for (int v : phi.phi[a])
      if (!std::binary_search(t.S[a].begin(), t.S[a].end(), v)) {
        r.issues.push_back({Errc::FunctorLawViolation,
                            "component at " + X.object_names[a] + " leaves S'"});
        return r;
      }
  }
  auto s_pos = [&](Obj a, int elem) {
    return (int)(std::lower_bound(s.S[a].begin(), s.S[a].end(), elem) - s.S[a].begin());
  };
  // Naturality over X^≅.
  for (Mor u = 0; u < X.num_morphisms(); ++u) {
    if (!is_isomorphism(X, u)) continue;
    Obj a = X.dom(u), b = X.cod(u);
    for (size_t i = 0; i < s.S[a].size(); ++i) {
      int via_s = phi.phi[b][s_pos(b, s.E_mor[u][s.S[a][i]])];
      int via_t = t.E_mor[u][phi.phi[a][i]];
      if (via_s != via_t) {
        r.issues.push_back({Errc::FunctorLawViolation,
                            "naturality fails at " + X.morphism_names[u]});
        return r;
      }
    }
  }
  // Monotonicity condition of a species morphism.
  for (Mor u = 0; u < X.num_morphisms(); ++u) {
    Obj a = X.dom(u), b = X.cod(u);
    for (size_t i = 0; i < s.S[a].size(); ++i)
      for (size_t j = 0; j < s.S[b].size(); ++j) {
        if (!s.E_obj[b].leq(s.E_mor[u][s.S[a][i]], s.S[b][j])) continue;
        if (!t.E_obj[b].leq(t.E_mor[u][phi.phi[a][i]], phi.phi[b][j])) {
          r.issues.push_back(
              {Errc::MonotonicityViolation,
               "condition fails on (" + X.morphism_names[u] + ", S-element " +
                   std::to_string(i) + ", S-element " + std::to_string(j) + ")"});
          return r;
        }
      }
  }
  return r;
}

Realization realize(const StructureSpecies& sigma) {
  {
    ValidationReport r = validate_species(sigma);
    if (!r.ok()) throw Error(r.issues.front().code, r.issues.front().detail);
  }
  const FiniteCategory& X = *sigma.base;
  Realization out;
  for (Obj a = 0; a < X.num_objects(); ++a)
    for (size_t i = 0; i < sigma.S[a].size(); ++i) out.objects.emplace_back(a, (int)i);

  FiniteCategory Y;
  Y.name = "Y_sigma";
  for (auto [a, i] : out.objects)
    Y.object_names.push_back("(" + X.object_names[a] + "|" + std::to_string(i) + ")");
  // Morphisms: (u, src, dst) with E(u)(T_src) ≤ T_dst.
  std::vector<std::tuple<Mor, int, int>> mors;
  int n = (int)out.objects.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, si] = out.objects[i];
      auto [b, sj] = out.objects[j];
      for (Mor u : X.hom(a, b))
        if (sigma.E_obj[b].leq(sigma.E_mor[u][sigma.S[a][si]], sigma.S[b][sj]))
          mors.emplace_back(u, i, j);
    }
  auto mor_index = [&](Mor u, int i, int j) -> Mor {
    for (size_t k = 0; k < mors.size(); ++k)
      if (mors[k] == std::make_tuple(u, i, j)) return (Mor)k;
    return kNone;
  };
  for (auto [u, i, j] : mors) {
    Y.morphism_names.push_back(X.morphism_names[u] + "@" + std::to_string(i) + "_" +
                               std::to_string(j));
    Y.dom_.push_back(i);
    Y.cod_.push_back(j);
  }
  for (int i = 0; i < n; ++i)
    Y.identity_.push_back(mor_index(X.identity(out.objects[i].first), i, i));
  int nm = (int)mors.size();
  Y.comp_.assign(nm, std::vector<Mor>(nm, kNone));
  for (Mor g = 0; g < nm; ++g)
    for (Mor f = 0; f < nm; ++f) {
      auto [gu, gi, gj] = mors[g];
      auto [fu, fi, fj] = mors[f];
      if (fj == gi) Y.comp_[g][f] = mor_index(X.compose(gu, fu), fi, gj);
    }
  FunctorData F;
  F.source = std::make_shared<FiniteCategory>(std::move(Y));
  F.target = sigma.base;
  for (auto [a, i] : out.objects) {
    (void)i;
    F.obj_map.push_back(a);
  }
  for (auto [u, i, j] : mors) {
    (void)i;
    (void)j;
    F.mor_map.push_back(u);
  }
  out.con = require_constructive(F);
  return out;
}

FunctorData realize_morphism(const SpeciesMorphism& phi, const Realization& from,
                             const Realization& to) {
  {
    ValidationReport r = validate_species_morphism(phi);
    if (!r.ok()) throw Error(r.issues.front().code, r.issues.front().detail);
  }
  const StructureSpecies& t = phi.target;
  ObjMap obj(from.objects.size());
  for (size_t i = 0; i < from.objects.size(); ++i) {
    auto [a, pos] = from.objects[i];
    int elem = phi.phi[a][pos];
    int tpos = (int)(std::lower_bound(t.S[a].begin(), t.S[a].end(), elem) - t.S[a].begin());
    obj[i] = kNone;
    for (size_t j = 0; j < to.objects.size(); ++j)
      if (to.objects[j] == std::make_pair(a, tpos)) obj[i] = (Obj)j;
    if (obj[i] == kNone) throw Error(Errc::SemanticError, "realized morphism bookkeeping");
  }
  return expand_over(from.con, to.con, obj);
}

std::vector<int> powerset_covariant(const std::vector<int>& f, int target_size) {
  int n = (int)f.size();
  std::vector<int> out(1 << n, 0);
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) out[mask] |= 1 << f[i];
  (void)target_size;
  return out;
}

std::vector<int> powerset_contravariant(const std::vector<int>& f, int target_size) {
  int n = (int)f.size();
  std::vector<int> out(1 << target_size, 0);
  for (int mask = 0; mask < (1 << target_size); ++mask)
    for (int i = 0; i < n; ++i)
      if (mask & (1 << f[i])) out[mask] |= 1 << i;
  return out;
}

std::vector<long long> topologies(int n) {
  int subsets = 1 << n;
  int full = subsets - 1;
  std::vector<long long> out;
  // A family is a bitmask over subset-masks; brute-force all families.
  for (long long fam = 0; fam < (1LL << subsets); ++fam) {
    if (!(fam & 1) || !(fam & (1LL << full))) continue;  // ∅ and T
    bool ok = true;
    for (int u = 0; u < subsets && ok; ++u) {
      if (!(fam & (1LL << u))) continue;
      for (int v = u; v < subsets && ok; ++v) {
        if (!(fam & (1LL << v))) continue;
        if (!(fam & (1LL << (u | v))) || !(fam & (1LL << (u & v)))) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

ValidationReport validate_setmap_category(const SetMapCategory& z) {
  ValidationReport r;
  const FiniteCategory& Z = *z.cat;
  if ((int)z.sizes.size() != Z.num_objects() || (int)z.op_map.size() != Z.num_morphisms()) {
    r.issues.push_back({Errc::FunctorLawViolation, "payload arity mismatch"});
    return r;
  }
  for (Mor u = 0; u < Z.num_morphisms(); ++u) {
    // Contravariant payload: f_u maps the codomain's set to the domain's.
    const auto& f = z.op_map[u];
    if ((int)f.size() != z.sizes[Z.cod(u)] ||
        std::any_of(f.begin(), f.end(),
                    [&](int v) { return v < 0 || v >= z.sizes[Z.dom(u)]; })) {
      r.issues.push_back({Errc::FunctorLawViolation,
                          "payload of " + Z.morphism_names[u] + " is not well-typed"});
      return r;
    }
  }
  for (Obj a = 0; a < Z.num_objects(); ++a)
    for (int i = 0; i < z.sizes[a]; ++i)
      if (z.op_map[Z.identity(a)][i] != i)
        r.issues.push_back({Errc::FunctorLawViolation,
                            "identity payload at " + Z.object_names[a] + " is not identity"});
  for (Mor g = 0; g < Z.num_morphisms(); ++g)
    for (Mor f = 0; f < Z.num_morphisms(); ++f) {
      if (!Z.composable(g, f)) continue;
      const auto& fg = z.op_map[Z.compose(g, f)];
      for (size_t i = 0; i < fg.size(); ++i)
        if (fg[i] != z.op_map[f][z.op_map[g][i]]) {
          r.issues.push_back({Errc::FunctorLawViolation,
                              "payload composition fails on " + Z.morphism_names[g] + "∘" +
                                  Z.morphism_names[f]});
          goto next;
        }
    next:;
    }
  return r;
}

StructureSpecies topology_species(const SetMapCategory& z) {
  {
    ValidationReport r = validate_setmap_category(z);
    if (!r.ok()) throw Error(r.issues.front().code, r.issues.front().detail);
  }
  const FiniteCategory& Z = *z.cat;
  for (int s : z.sizes)
    if (s > 3)
      throw Error(Errc::PayloadTooLarge, "topology species limited to sets of size at most 3");

  StructureSpecies sigma;
  sigma.base = z.cat;
  for (Obj a = 0; a < Z.num_objects(); ++a) {
    int families = 1 << (1 << z.sizes[a]);
    OrderedSet o;
    for (int fam = 0; fam < families; ++fam) o.elements.push_back("F" + std::to_string(fam));
    o.le.assign(families, std::vector<bool>(families, false));
    for (int p = 0; p < families; ++p)
      for (int q = 0; q < families; ++q) o.le[p][q] = (p & q) == p;  // family inclusion
    sigma.E_obj.push_back(std::move(o));
    std::vector<int> sel;
    for (long long fam : topologies(z.sizes[a])) sel.push_back((int)fam);
    sigma.S.push_back(std::move(sel));
  }
  for (Mor u = 0; u < Z.num_morphisms(); ++u) {
    // E(u) = P⁺(P⁻(f_u)) : families over dom(u) → families over cod(u).
    auto preim = powerset_contravariant(z.op_map[u], z.sizes[Z.dom(u)]);
    int dom_subsets = 1 << z.sizes[Z.dom(u)];
    int dom_families = 1 << dom_subsets;
    std::vector<int> e(dom_families, 0);
    for (int fam = 0; fam < dom_families; ++fam)
      for (int sub = 0; sub < dom_subsets; ++sub)
        if (fam & (1 << sub)) e[fam] |= 1 << preim[sub];
    sigma.E_mor.push_back(std::move(e));
  }
  return sigma;
}

}  // namespace specat
