#include "specat/constructive.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace specat {

std::optional<ConFunctor> is_constructive(const FunctorData& F, ValidationReport* report) {
  ValidationReport local;
  ValidationReport& r = report ? *report : local;
  const FiniteCategory& Y = *F.source;
  const FiniteCategory& X = *F.target;
  if (!is_faithful(F)) {
    r.issues.push_back({Errc::NotFaithful, "two parallel morphisms collapse"});
    return std::nullopt;
  }
  ConFunctor c;
  c.F = F;
  c.lift.assign(Y.num_objects(), std::vector<Mor>(X.num_morphisms(), kNone));
  std::vector<bool> isoY(Y.num_morphisms());
  for (Mor m = 0; m < Y.num_morphisms(); ++m) isoY[m] = is_isomorphism(Y, m);
  for (Obj a = 0; a < Y.num_objects(); ++a)
    for (Mor u = 0; u < X.num_morphisms(); ++u) {
      if (X.dom(u) != F.obj_map[a] || !is_isomorphism(X, u)) continue;
      Mor found = kNone;
      for (Mor m = 0; m < Y.num_morphisms(); ++m) {
        if (Y.dom(m) != a || !isoY[m] || F.mor_map[m] != u) continue;
        if (found != kNone) {
          r.issues.push_back({Errc::LiftNotUnique,
                              "two lifts of " + X.morphism_names[u] + " at " +
                                  Y.object_names[a]});
          return std::nullopt;
        }
        found = m;
      }
      if (found == kNone) {
        r.issues.push_back({Errc::LiftMissing,
                            "no lift of " + X.morphism_names[u] + " at " + Y.object_names[a]});
        return std::nullopt;
      }
      c.lift[a][u] = found;
    }
  return c;
}

ConFunctor require_constructive(const FunctorData& F) {
  ValidationReport r;
  auto c = is_constructive(F, &r);
  if (!c) throw Error(r.issues.front().code, r.issues.front().detail);
  return *c;
}

Mor lift_iso(const ConFunctor& F, Obj a, Mor u) {
  const FiniteCategory& X = *F.base();
  if (u < 0 || u >= X.num_morphisms() || !is_isomorphism(X, u))
    throw Error(Errc::NotAnIso, "lifted morphism must be an isomorphism of the base");
  if (X.dom(u) != F.F.obj_map[a])
    throw Error(Errc::DomainMismatch, "lift requested at an object over the wrong domain");
  return F.lift[a][u];
}

bool commutes_over_base(const FunctorData& phi, const FunctorData& from, const FunctorData& to) {
  for (size_t a = 0; a < from.obj_map.size(); ++a)
    if (to.obj_map[phi.obj_map[a]] != from.obj_map[a]) return false;
  for (size_t m = 0; m < from.mor_map.size(); ++m)
    if (to.mor_map[phi.mor_map[m]] != from.mor_map[m]) return false;
  return true;
}

// ---- hom-sets over X ----

namespace {

// Per-target lookup: the unique morphism of Y' from y1 to y2 lying over a
// given base morphism (kNone when absent). Valid only for faithful targets.
struct OverIndex {
  std::vector<std::vector<std::vector<Mor>>> mor;  // [y1][y2][baseMor]
  explicit OverIndex(const FunctorData& to) {
    const FiniteCategory& Y = *to.source;
    const FiniteCategory& X = *to.target;
    mor.assign(Y.num_objects(),
               std::vector<std::vector<Mor>>(Y.num_objects(),
                                             std::vector<Mor>(X.num_morphisms(), kNone)));
    for (Mor m = 0; m < Y.num_morphisms(); ++m)
      mor[Y.dom(m)][Y.cod(m)][to.mor_map[m]] = m;
  }
};

struct HomSearch {
  const FunctorData& from;
  const FunctorData& to;
  const OverIndex& idx;
  SearchBudget& budget;
  std::vector<std::vector<Obj>> fiber;  // candidate targets per source object
  ObjMap cur;
  std::vector<ObjMap>& out;

  bool ok(Obj a) {
    const FiniteCategory& Y = *from.source;
    for (Mor m = 0; m < Y.num_morphisms(); ++m) {
      Obj s = Y.dom(m), t = Y.cod(m);
      if (cur[s] == kNone || cur[t] == kNone) continue;
      if (s != a && t != a) continue;
      if (idx.mor[cur[s]][cur[t]][from.mor_map[m]] == kNone) return false;
    }
    return true;
  }

  void go(Obj a) {
    if (a == (Obj)cur.size()) {
      out.push_back(cur);
      return;
    }
    for (Obj y : fiber[a]) {
      budget.tick();
      cur[a] = y;
      if (ok(a)) go(a + 1);
    }
    cur[a] = kNone;
  }
};

}  // namespace

std::vector<ObjMap> faithful_hom_over(const FunctorData& from, const FunctorData& to,
                                      SearchBudget* budget) {
  if (!is_faithful(to))
    throw Error(Errc::NotFaithful, "hom-set enumeration requires a faithful target");
  SearchBudget local;
  SearchBudget& b = budget ? *budget : local;
  const FiniteCategory& Y = *from.source;
  const FiniteCategory& Yp = *to.source;
  std::vector<std::vector<Obj>> fiber(Y.num_objects());
  for (Obj a = 0; a < Y.num_objects(); ++a)
    for (Obj y = 0; y < Yp.num_objects(); ++y)
      if (to.obj_map[y] == from.obj_map[a]) fiber[a].push_back(y);
  std::vector<ObjMap> out;
  OverIndex idx(to);
  HomSearch s{from, to, idx, b, std::move(fiber), ObjMap(Y.num_objects(), kNone), out};
  s.go(0);
  return out;
}

std::vector<ObjMap> hom_over(const ConFunctor& from, const ConFunctor& to, SearchBudget* budget) {
  return faithful_hom_over(from.F, to.F, budget);
}

FunctorData faithful_expand_over(const FunctorData& from, const FunctorData& to,
                                 const ObjMap& phi) {
  const FiniteCategory& Y = *from.source;
  OverIndex idx(to);
  FunctorData f;
  f.source = from.source;
  f.target = to.source;
  f.obj_map = phi;
  f.mor_map.resize(Y.num_morphisms());
  for (Mor m = 0; m < Y.num_morphisms(); ++m) {
    Mor t = idx.mor[phi[Y.dom(m)]][phi[Y.cod(m)]][from.mor_map[m]];
    if (t == kNone)
      throw Error(Errc::SemanticError, "object map does not extend to a functor over the base");
    f.mor_map[m] = t;
  }
  return f;
}

FunctorData expand_over(const ConFunctor& from, const ConFunctor& to, const ObjMap& phi) {
  return faithful_expand_over(from.F, to.F, phi);
}

ObjMap compose_obj_maps(const ObjMap& g, const ObjMap& f) {
  ObjMap h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

// ---- covers ----

int Cover::object_by_iso(Mor u) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].second == u) return (int)i;
  throw Error(Errc::UnknownMorphism, "no cover object for the given isomorphism");
}

namespace {

Cover build_cover(const CatPtr& X, Obj e, const std::string& name) {
  const FiniteCategory& C = *X;
  Subcategory G = groupoid_component(X, e);
  Cover cv;
  cv.basepoint = e;
  // Objects (a, u) with u : e → a invertible; deterministic order.
  for (Obj a : G.objects)
    for (Mor u : C.hom(e, a))
      if (is_isomorphism(C, u)) cv.objects.emplace_back(a, u);

  int n = (int)cv.objects.size();
  FiniteCategory Y;
  Y.name = name;
  std::vector<Mor> inv_u(n);
  for (int i = 0; i < n; ++i) {
    Y.object_names.push_back("(" + C.object_names[cv.objects[i].first] + "|" +
                             C.morphism_names[cv.objects[i].second] + ")");
    inv_u[i] = *inverse_of(C, cv.objects[i].second);
  }
  // One morphism per object pair; morphism id = i*n + j for (i → j).
  std::vector<Mor> under(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mor m = i * n + j;
      under[m] = C.compose(cv.objects[j].second, inv_u[i]);
      Y.morphism_names.push_back("m" + std::to_string(i) + "_" + std::to_string(j));
      Y.dom_.push_back(i);
      Y.cod_.push_back(j);
    }
  Y.identity_.resize(n);
  for (int i = 0; i < n; ++i) Y.identity_[i] = i * n + i;
  Y.comp_.assign(n * n, std::vector<Mor>(n * n, kNone));
  for (Mor g = 0; g < n * n; ++g)
    for (Mor f = 0; f < n * n; ++f)
      if (Y.dom_[g] == Y.cod_[f]) Y.comp_[g][f] = Y.dom_[f] * n + Y.cod_[g];

  FunctorData F;
  F.source = std::make_shared<FiniteCategory>(std::move(Y));
  F.target = X;
  for (int i = 0; i < n; ++i) F.obj_map.push_back(cv.objects[i].first);
  F.mor_map = under;
  cv.con = require_constructive(F);
  return cv;
}

}  // namespace

Cover point_cover(const CatPtr& X, Obj e) {
  if (e < 0 || e >= X->num_objects()) throw Error(Errc::UnknownObject, "cover basepoint");
  return build_cover(X, e, "cover_" + X->object_names[e]);
}

Cover universal_cover(const Subcategory::Materialized& G, Obj e_in_G) {
  const FiniteCategory& g = *G.cat;
  for (Mor m = 0; m < g.num_morphisms(); ++m)
    if (!is_isomorphism(g, m))
      throw Error(Errc::NotConnectedGroupoid, "base is not a groupoid");
  if (!is_connected(g))
    throw Error(Errc::NotConnectedGroupoid, "base groupoid is not connected");
  return build_cover(G.cat, e_in_G, "ucover_" + g.object_names[e_in_G]);
}

ConFunctor pushforward_groupoid(const CatPtr& X, const Subcategory::Materialized& G,
                                const ConFunctor& F) {
  const FiniteCategory& C = *X;
  // G must be a maximal connected groupoid in X: every isomorphism of X
  // touching an object of G lies in G.
  const FiniteCategory& g = *G.cat;
  for (Mor m = 0; m < g.num_morphisms(); ++m)
    if (!is_isomorphism(g, m))
      throw Error(Errc::NotMaximalGroupoid, "subcategory is not a groupoid");
  if (!is_connected(g)) throw Error(Errc::NotMaximalGroupoid, "groupoid is not connected");
  std::vector<bool> in_g_obj(C.num_objects(), false), in_g_mor(C.num_morphisms(), false);
  for (Obj a : G.obj_index) in_g_obj[a] = true;
  for (Mor m : G.mor_index) in_g_mor[m] = true;
  for (Mor m = 0; m < C.num_morphisms(); ++m) {
    if (!is_isomorphism(C, m)) continue;
    if ((in_g_obj[C.dom(m)] || in_g_obj[C.cod(m)]) && !in_g_mor[m])
      throw Error(Errc::NotMaximalGroupoid, "an isomorphism of the ambient category escapes");
  }
  FunctorData widened;
  widened.source = F.total();
  widened.target = X;
  for (Obj a : F.F.obj_map) widened.obj_map.push_back(G.obj_index[a]);
  for (Mor m : F.F.mor_map) widened.mor_map.push_back(G.mor_index[m]);
  return require_constructive(widened);
}

FunctorData deck(const Cover& from, const Cover& to, Mor w) {
  const FiniteCategory& X = *from.con.base();
  auto winv = inverse_of(X, w);
  if (!winv) throw Error(Errc::NotInvertible, "deck transformations require invertible w");
  if (X.dom(w) != from.basepoint || X.cod(w) != to.basepoint)
    throw Error(Errc::DomainMismatch, "w must run between the two basepoints");
  ObjMap phi(from.objects.size());
  for (size_t i = 0; i < from.objects.size(); ++i)
    phi[i] = to.object_by_iso(X.compose(from.objects[i].second, *winv));
  return expand_over(from.con, to.con, phi);
}

AutGroup aut_group(const FiniteCategory& X, Obj e) {
  AutGroup g;
  for (Mor m : X.hom(e, e))
    if (is_isomorphism(X, m)) g.elements.push_back(m);
  int n = (int)g.elements.size();
  auto index_of = [&](Mor m) {
    for (int i = 0; i < n; ++i)
      if (g.elements[i] == m) return i;
    throw Error(Errc::LawViolation, "automorphism set not closed under composition");
  };
  g.table.assign(n, std::vector<int>(n));
  g.inverse.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      g.table[i][j] = index_of(X.compose(g.elements[i], g.elements[j]));
    g.inverse[i] = index_of(*inverse_of(X, g.elements[i]));
  }
  return g;
}

EvBijection ev(const Cover& cover, const ConFunctor& F) {
  EvBijection b;
  b.morphisms = hom_over(cover.con, F);
  const FiniteCategory& Y = *F.total();
  Obj e = cover.basepoint;
  for (Obj y = 0; y < Y.num_objects(); ++y)
    if (F.F.obj_map[y] == e) b.fiber.push_back(y);
  // Sort morphisms by their value at (e, id_e) so the two lists align.
  int base = cover.object_by_iso(cover.con.base()->identity(e));
  std::sort(b.morphisms.begin(), b.morphisms.end(),
            [&](const ObjMap& p, const ObjMap& q) { return p[base] < q[base]; });
  return b;
}

ObjMap ev_inverse(const Cover& cover, const ConFunctor& F, Obj y) {
  const FiniteCategory& Y = *F.total();
  if (F.F.obj_map[y] != cover.basepoint)
    throw Error(Errc::DomainMismatch, "object does not lie over the basepoint");
  ObjMap phi(cover.objects.size());
  for (size_t i = 0; i < cover.objects.size(); ++i) {
    Mor u = cover.objects[i].second;
    phi[i] = Y.cod(lift_iso(F, y, u));
  }
  return phi;
}

// ---- multicovers ----

std::optional<MultiCover> make_multicover(const CatPtr& X, const std::vector<Obj>& basepoints,
                                          const std::vector<std::tuple<int, int, Mor>>& links,
                                          const std::string& name) {
  const FiniteCategory& C = *X;
  int np = (int)basepoints.size();
  std::vector<std::vector<Mor>> link(np, std::vector<Mor>(np, kNone));
  for (auto [p, q, v] : links) {
    if (p == q) return std::nullopt;
    if (C.dom(v) != basepoints[p] || C.cod(v) != basepoints[q])
      throw Error(Errc::DomainMismatch, "connecting morphism endpoints mismatch");
    if (is_isomorphism(C, v)) return std::nullopt;
    if (link[p][q] != kNone && link[p][q] != v) return std::nullopt;
    link[p][q] = v;
  }
  // Close links under composition; reject cycles, conflicts, and invertible
  // induced connections (all of which break the singleton-hom cover shape).
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        if (link[p][q] == kNone) continue;
        for (int r = 0; r < np; ++r) {
          if (link[q][r] == kNone) continue;
          Mor v = C.compose(link[q][r], link[p][q]);
          if (p == r || is_isomorphism(C, v)) return std::nullopt;
          if (link[p][r] == kNone) {
            link[p][r] = v;
            changed = true;
          } else if (link[p][r] != v) {
            return std::nullopt;
          }
        }
      }
  }

  MultiCover mc;
  mc.links = link;
  for (int p = 0; p < np; ++p) mc.parts.push_back(point_cover(X, basepoints[p]));
  mc.offset.resize(np);
  int total = 0;
  for (int p = 0; p < np; ++p) {
    mc.offset[p] = total;
    total += (int)mc.parts[p].objects.size();
  }

  FiniteCategory Y;
  Y.name = name;
  std::vector<int> part_of(total);
  std::vector<Mor> obj_iso(total);     // the u of (a, u)
  std::vector<Mor> obj_iso_inv(total);
  std::vector<Obj> obj_base(total);
  for (int p = 0; p < np; ++p)
    for (size_t i = 0; i < mc.parts[p].objects.size(); ++i) {
      int o = mc.offset[p] + (int)i;
      part_of[o] = p;
      obj_base[o] = mc.parts[p].objects[i].first;
      obj_iso[o] = mc.parts[p].objects[i].second;
      obj_iso_inv[o] = *inverse_of(C, obj_iso[o]);
      Y.object_names.push_back("p" + std::to_string(p) + "_" +
                               mc.parts[p].con.total()->object_names[i]);
    }

  // Morphism between objects o1 → o2 exists when same part or linked parts.
  std::vector<std::vector<Mor>> arrow(total, std::vector<Mor>(total, kNone));
  std::vector<Mor> under;
  for (int o1 = 0; o1 < total; ++o1)
    for (int o2 = 0; o2 < total; ++o2) {
      int p = part_of[o1], q = part_of[o2];
      Mor u;
      if (p == q) {
        u = C.compose(obj_iso[o2], obj_iso_inv[o1]);
      } else if (link[p][q] != kNone) {
        u = C.compose(obj_iso[o2], C.compose(link[p][q], obj_iso_inv[o1]));
      } else {
        continue;
      }
      arrow[o1][o2] = (Mor)Y.morphism_names.size();
      Y.morphism_names.push_back("m" + std::to_string(o1) + "_" + std::to_string(o2));
      Y.dom_.push_back(o1);
      Y.cod_.push_back(o2);
      under.push_back(u);
    }
  Y.identity_.resize(total);
  for (int o = 0; o < total; ++o) Y.identity_[o] = arrow[o][o];
  int nm = (int)Y.morphism_names.size();
  Y.comp_.assign(nm, std::vector<Mor>(nm, kNone));
  for (Mor g = 0; g < nm; ++g)
    for (Mor f = 0; f < nm; ++f)
      if (Y.dom_[g] == Y.cod_[f]) Y.comp_[g][f] = arrow[Y.dom_[f]][Y.cod_[g]];

  FunctorData F;
  F.source = std::make_shared<FiniteCategory>(std::move(Y));
  F.target = X;
  F.obj_map = obj_base;
  F.mor_map = under;
  mc.con = require_constructive(F);

  for (int p = 0; p < np; ++p) {
    FunctorData inj;
    inj.source = mc.parts[p].con.total();
    inj.target = mc.con.total();
    int sz = (int)mc.parts[p].objects.size();
    for (int i = 0; i < sz; ++i) inj.obj_map.push_back(mc.offset[p] + i);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        inj.mor_map.push_back(arrow[mc.offset[p] + i][mc.offset[p] + j]);
    mc.inj.push_back(std::move(inj));
  }
  return mc;
}

MultiCover cover_coproduct(const CatPtr& X, const std::vector<Obj>& basepoints,
                           const std::string& name) {
  auto mc = make_multicover(X, basepoints, {}, name);
  return *mc;  // always well-formed without links
}

BridgeData make_bridge(const CatPtr& X, Obj e_dom, Obj e_cod, Mor v, const std::string& name) {
  const FiniteCategory& C = *X;
  if (C.dom(v) != e_dom || C.cod(v) != e_cod)
    throw Error(Errc::DomainMismatch, "bridge morphism endpoints mismatch");
  if (is_isomorphism(C, v))
    throw Error(Errc::VIsInvertible, "bridges require a non-invertible morphism");
  auto mc = make_multicover(X, {e_dom, e_cod}, {{0, 1, v}}, name);
  if (!mc) throw Error(Errc::SemanticError, "bridge shape rejected");
  return BridgeData{std::move(*mc), v};
}

// ---- generic constructions ----

Coproduct con_coproduct(const ConFunctor& F1, const ConFunctor& F2, const std::string& name) {
  const FiniteCategory& Y1 = *F1.total();
  const FiniteCategory& Y2 = *F2.total();
  FiniteCategory Y;
  Y.name = name;
  int no1 = Y1.num_objects(), nm1 = Y1.num_morphisms();
  for (Obj a = 0; a < no1; ++a) Y.object_names.push_back("l_" + Y1.object_names[a]);
  for (Obj a = 0; a < Y2.num_objects(); ++a) Y.object_names.push_back("r_" + Y2.object_names[a]);
  for (Mor m = 0; m < nm1; ++m) {
    Y.morphism_names.push_back("l_" + Y1.morphism_names[m]);
    Y.dom_.push_back(Y1.dom(m));
    Y.cod_.push_back(Y1.cod(m));
  }
  for (Mor m = 0; m < Y2.num_morphisms(); ++m) {
    Y.morphism_names.push_back("r_" + Y2.morphism_names[m]);
    Y.dom_.push_back(no1 + Y2.dom(m));
    Y.cod_.push_back(no1 + Y2.cod(m));
  }
  for (Obj a = 0; a < no1; ++a) Y.identity_.push_back(Y1.identity(a));
  for (Obj a = 0; a < Y2.num_objects(); ++a) Y.identity_.push_back(nm1 + Y2.identity(a));
  int nm = nm1 + Y2.num_morphisms();
  Y.comp_.assign(nm, std::vector<Mor>(nm, kNone));
  for (Mor g = 0; g < nm1; ++g)
    for (Mor f = 0; f < nm1; ++f)
      if (Y1.comp_[g][f] != kNone) Y.comp_[g][f] = Y1.comp_[g][f];
  for (Mor g = 0; g < Y2.num_morphisms(); ++g)
    for (Mor f = 0; f < Y2.num_morphisms(); ++f)
      if (Y2.comp_[g][f] != kNone) Y.comp_[nm1 + g][nm1 + f] = nm1 + Y2.comp_[g][f];

  FunctorData F;
  F.source = std::make_shared<FiniteCategory>(std::move(Y));
  F.target = F1.base();
  F.obj_map = F1.F.obj_map;
  F.obj_map.insert(F.obj_map.end(), F2.F.obj_map.begin(), F2.F.obj_map.end());
  F.mor_map = F1.F.mor_map;
  F.mor_map.insert(F.mor_map.end(), F2.F.mor_map.begin(), F2.F.mor_map.end());

  Coproduct out;
  out.value = require_constructive(F);
  out.inj1.source = F1.total();
  out.inj1.target = out.value.total();
  for (Obj a = 0; a < no1; ++a) out.inj1.obj_map.push_back(a);
  for (Mor m = 0; m < nm1; ++m) out.inj1.mor_map.push_back(m);
  out.inj2.source = F2.total();
  out.inj2.target = out.value.total();
  for (Obj a = 0; a < Y2.num_objects(); ++a) out.inj2.obj_map.push_back(no1 + a);
  for (Mor m = 0; m < Y2.num_morphisms(); ++m) out.inj2.mor_map.push_back(nm1 + m);
  return out;
}

ConFunctor con_empty(const CatPtr& X) {
  CategoryBuilder b("empty");
  FunctorData F;
  F.source = b.build_or_throw();
  F.target = X;
  return require_constructive(F);
}

FiberProduct con_fiber_product(const ConFunctor& F1, const ConFunctor& F2,
                               const ConFunctor& F0, const FunctorData& phi1,
                               const FunctorData& phi2) {
  const FiniteCategory& Y1 = *F1.total();
  const FiniteCategory& Y2 = *F2.total();
  std::vector<std::pair<Obj, Obj>> objs;
  for (Obj a = 0; a < Y1.num_objects(); ++a)
    for (Obj b = 0; b < Y2.num_objects(); ++b)
      if (phi1.obj_map[a] == phi2.obj_map[b]) objs.emplace_back(a, b);
  std::vector<std::pair<Mor, Mor>> mors;
  for (Mor m = 0; m < Y1.num_morphisms(); ++m)
    for (Mor n = 0; n < Y2.num_morphisms(); ++n)
      if (phi1.mor_map[m] == phi2.mor_map[n]) mors.emplace_back(m, n);
  auto obj_index = [&](Obj a, Obj b) {
    for (size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == std::make_pair(a, b)) return (int)i;
    throw Error(Errc::SemanticError, "fiber product bookkeeping");
  };
  auto mor_index = [&](Mor m, Mor n) -> Mor {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i] == std::make_pair(m, n)) return (Mor)i;
    return kNone;
  };
  FiniteCategory Y;
  Y.name = "fiberprod";
  for (auto [a, b] : objs)
    Y.object_names.push_back("(" + Y1.object_names[a] + "," + Y2.object_names[b] + ")");
  for (auto [m, n] : mors) {
    Y.morphism_names.push_back("(" + Y1.morphism_names[m] + "," + Y2.morphism_names[n] + ")");
    Y.dom_.push_back(obj_index(Y1.dom(m), Y2.dom(n)));
    Y.cod_.push_back(obj_index(Y1.cod(m), Y2.cod(n)));
  }
  for (auto [a, b] : objs) Y.identity_.push_back(mor_index(Y1.identity(a), Y2.identity(b)));
  int nm = (int)mors.size();
  Y.comp_.assign(nm, std::vector<Mor>(nm, kNone));
  for (Mor g = 0; g < nm; ++g)
    for (Mor f = 0; f < nm; ++f) {
      auto [gm, gn] = mors[g];
      auto [fm, fn] = mors[f];
      if (Y1.composable(gm, fm) && Y2.composable(gn, fn))
        Y.comp_[g][f] = mor_index(Y1.compose(gm, fm), Y2.compose(gn, fn));
    }
  (void)F0;
  FunctorData F;
  F.source = std::make_shared<FiniteCategory>(std::move(Y));
  F.target = F1.base();
  for (auto [a, b] : objs) {
    (void)b;
    F.obj_map.push_back(F1.F.obj_map[a]);
  }
  for (auto [m, n] : mors) {
    (void)n;
    F.mor_map.push_back(F1.F.mor_map[m]);
  }
  FiberProduct out;
  out.value = require_constructive(F);
  out.proj1.source = out.value.total();
  out.proj1.target = F1.total();
  out.proj2.source = out.value.total();
  out.proj2.target = F2.total();
  for (auto [a, b] : objs) {
    out.proj1.obj_map.push_back(a);
    out.proj2.obj_map.push_back(b);
  }
  for (auto [m, n] : mors) {
    out.proj1.mor_map.push_back(m);
    out.proj2.mor_map.push_back(n);
  }
  return out;
}

ConFunctor pullback_along(const FunctorData& f, const ConFunctor& F) {
  const FiniteCategory& Xp = *f.source;
  const FiniteCategory& Y = *F.total();
  std::vector<std::pair<Obj, Obj>> objs;  // (y, x')
  for (Obj y = 0; y < Y.num_objects(); ++y)
    for (Obj x = 0; x < Xp.num_objects(); ++x)
      if (F.F.obj_map[y] == f.obj_map[x]) objs.emplace_back(y, x);
  std::vector<std::pair<Mor, Mor>> mors;
  for (Mor m = 0; m < Y.num_morphisms(); ++m)
    for (Mor n = 0; n < Xp.num_morphisms(); ++n)
      if (F.F.mor_map[m] == f.mor_map[n]) mors.emplace_back(m, n);
  auto obj_index = [&](Obj y, Obj x) {
    for (size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == std::make_pair(y, x)) return (int)i;
    throw Error(Errc::SemanticError, "pullback bookkeeping");
  };
  auto mor_index = [&](Mor m, Mor n) -> Mor {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i] == std::make_pair(m, n)) return (Mor)i;
    return kNone;
  };
  FiniteCategory P;
  P.name = "pullback";
  for (auto [y, x] : objs)
    P.object_names.push_back("(" + Y.object_names[y] + "," + Xp.object_names[x] + ")");
  for (auto [m, n] : mors) {
    P.morphism_names.push_back("(" + Y.morphism_names[m] + "," + Xp.morphism_names[n] + ")");
    P.dom_.push_back(obj_index(Y.dom(m), Xp.dom(n)));
    P.cod_.push_back(obj_index(Y.cod(m), Xp.cod(n)));
  }
  for (auto [y, x] : objs) P.identity_.push_back(mor_index(Y.identity(y), Xp.identity(x)));
  int nm = (int)mors.size();
  P.comp_.assign(nm, std::vector<Mor>(nm, kNone));
  for (Mor g = 0; g < nm; ++g)
    for (Mor f2 = 0; f2 < nm; ++f2) {
      auto [gm, gn] = mors[g];
      auto [fm, fn] = mors[f2];
      if (Y.composable(gm, fm) && Xp.composable(gn, fn))
        P.comp_[g][f2] = mor_index(Y.compose(gm, fm), Xp.compose(gn, fn));
    }
  FunctorData G;
  G.source = std::make_shared<FiniteCategory>(std::move(P));
  G.target = f.source;
  for (auto [y, x] : objs) {
    (void)y;
    G.obj_map.push_back(x);
  }
  for (auto [m, n] : mors) {
    (void)m;
    G.mor_map.push_back(n);
  }
  return require_constructive(G);
}

ConFunctor identity_con(const CatPtr& X) { return require_constructive(identity_functor(X)); }

}  // namespace specat
