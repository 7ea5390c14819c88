#include "specat/functor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace specat {

ValidationReport validate_functor(const FunctorData& f) {
  ValidationReport r;
  const FiniteCategory& C = *f.source;
  const FiniteCategory& D = *f.target;
  if ((int)f.obj_map.size() != C.num_objects() || (int)f.mor_map.size() != C.num_morphisms()) {
    r.issues.push_back({Errc::LawViolation, "object/morphism map arity mismatch"});
    return r;
  }
  for (Obj a : f.obj_map)
    if (a < 0 || a >= D.num_objects()) {
      r.issues.push_back({Errc::UnknownObject, "object map leaves the target category"});
      return r;
    }
  for (Mor m : f.mor_map)
    if (m < 0 || m >= D.num_morphisms()) {
      r.issues.push_back({Errc::UnknownMorphism, "morphism map leaves the target category"});
      return r;
    }
  for (Mor m = 0; m < C.num_morphisms(); ++m) {
    if (D.dom(f.mor_map[m]) != f.obj_map[C.dom(m)] ||
        D.cod(f.mor_map[m]) != f.obj_map[C.cod(m)])
      r.issues.push_back({Errc::LawViolation,
                          "endpoints not preserved at " + C.morphism_names[m]});
  }
  for (Obj a = 0; a < C.num_objects(); ++a)
    if (f.mor_map[C.identity(a)] != D.identity(f.obj_map[a]))
      r.issues.push_back({Errc::LawViolation,
                          "identity not preserved at " + C.object_names[a]});
  for (Mor g = 0; g < C.num_morphisms(); ++g)
    for (Mor fm = 0; fm < C.num_morphisms(); ++fm) {
      if (!C.composable(g, fm)) continue;
      if (f.mor_map[C.compose(g, fm)] != D.compose(f.mor_map[g], f.mor_map[fm]))
        r.issues.push_back({Errc::LawViolation,
                            "composition not preserved on (" + C.morphism_names[g] + ", " +
                                C.morphism_names[fm] + ")"});
    }
  return r;
}

bool is_valid_functor(const FunctorData& f) { return validate_functor(f).ok(); }

ValidationReport validate_natural_transformation(const NaturalTransformationData& t) {
  ValidationReport r;
  const FunctorData& F = t.source;
  const FunctorData& G = t.target;
  if (F.source != G.source || F.target != G.target) {
    r.issues.push_back({Errc::DomainMismatch, "transformation between non-parallel functors"});
    return r;
  }
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  if ((int)t.components.size() != C.num_objects()) {
    r.issues.push_back({Errc::LawViolation, "component arity mismatch"});
    return r;
  }
  for (Obj a = 0; a < C.num_objects(); ++a) {
    Mor c = t.components[a];
    if (c < 0 || c >= D.num_morphisms() || D.dom(c) != F.obj_map[a] ||
        D.cod(c) != G.obj_map[a]) {
      r.issues.push_back({Errc::DomainMismatch,
                          "component at " + C.object_names[a] + " has wrong endpoints"});
      return r;
    }
  }
  for (Mor m = 0; m < C.num_morphisms(); ++m) {
    Obj a = C.dom(m), b = C.cod(m);
    if (D.compose(t.components[b], F.mor_map[m]) != D.compose(G.mor_map[m], t.components[a]))
      r.issues.push_back({Errc::LawViolation,
                          "naturality fails at " + C.morphism_names[m]});
  }
  return r;
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f;
  f.source = f.target = c;
  f.obj_map.resize(c->num_objects());
  f.mor_map.resize(c->num_morphisms());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (f.target != g.source)
    throw Error(Errc::DomainMismatch, "functor composition endpoint mismatch");
  FunctorData h;
  h.source = f.source;
  h.target = g.target;
  h.obj_map.reserve(f.obj_map.size());
  h.mor_map.reserve(f.mor_map.size());
  for (Obj a : f.obj_map) h.obj_map.push_back(g.obj_map[a]);
  for (Mor m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  return h;
}

bool is_faithful(const FunctorData& f) {
  const FiniteCategory& C = *f.source;
  for (Mor m = 0; m < C.num_morphisms(); ++m)
    for (Mor n = m + 1; n < C.num_morphisms(); ++n)
      if (C.dom(m) == C.dom(n) && C.cod(m) == C.cod(n) && f.mor_map[m] == f.mor_map[n])
        return false;
  return true;
}

bool is_full(const FunctorData& f) {
  const FiniteCategory& C = *f.source;
  const FiniteCategory& D = *f.target;
  for (Obj a = 0; a < C.num_objects(); ++a)
    for (Obj b = 0; b < C.num_objects(); ++b) {
      auto image = D.hom(f.obj_map[a], f.obj_map[b]);
      for (Mor t : image) {
        bool hit = false;
        for (Mor m : C.hom(a, b))
          if (f.mor_map[m] == t) { hit = true; break; }
        if (!hit) return false;
      }
    }
  return true;
}

bool is_injective_on_objects(const FunctorData& f) {
  std::vector<Obj> v = f.obj_map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

FunctorData op_functor(const FunctorData& f, const CatPtr& source_op, const CatPtr& target_op) {
  FunctorData g = f;
  g.source = source_op;
  g.target = target_op;
  return g;
}

namespace {

// Degree profile of an object: sorted list of (|Mor(a,b)|, |Mor(b,a)|) pairs
// plus the endo count; isomorphic objects in isomorphic categories must agree.
std::vector<std::pair<int, int>> degree_profile(const FiniteCategory& c, Obj a) {
  std::vector<std::pair<int, int>> prof;
  for (Obj b = 0; b < c.num_objects(); ++b)
    prof.emplace_back((int)c.hom(a, b).size(), (int)c.hom(b, a).size());
  std::sort(prof.begin(), prof.end());
  return prof;
}

struct IsoSearch {
  const FiniteCategory& C;
  const FiniteCategory& D;
  SearchBudget& budget;
  std::vector<Obj> obj_map;      // C object -> D object, kNone if unset
  std::vector<bool> obj_used;    // D objects taken
  std::vector<Mor> mor_map;      // C morphism -> D morphism
  std::vector<bool> mor_used;

  // Morphism choices interleave with object choices in one backtracking
  // stack, so a bad hom-set matching made early is revisited when a later
  // constraint rejects it.
  bool match_pending(const std::vector<Mor>& pend, size_t k, size_t next,
                     const std::vector<Obj>& order,
                     const std::vector<std::vector<Obj>>& candidates) {
    if (k == pend.size()) return search_objects(next, order, candidates);
    Mor m = pend[k];
    for (Mor t : D.hom(obj_map[C.dom(m)], obj_map[C.cod(m)])) {
      if (mor_used[t]) continue;
      budget.tick();
      mor_map[m] = t;
      mor_used[t] = true;
      if (local_consistent(m) && match_pending(pend, k + 1, next, order, candidates)) return true;
      mor_map[m] = kNone;
      mor_used[t] = false;
    }
    return false;
  }

  // Checks identity preservation and all composition equations in which every
  // participating morphism is already mapped.
  bool local_consistent(Mor m) {
    if (C.is_identity(m) != D.is_identity(mor_map[m])) return false;
    if (C.is_identity(m) && mor_map[m] != D.identity(obj_map[C.dom(m)])) return false;
    for (Mor n = 0; n < C.num_morphisms(); ++n) {
      if (mor_map[n] == kNone) continue;
      if (C.composable(m, n)) {
        Mor h = C.compose(m, n);
        if (mor_map[h] != kNone && D.compose(mor_map[m], mor_map[n]) != mor_map[h]) return false;
        if (mor_map[h] == kNone && h == m && D.compose(mor_map[m], mor_map[n]) != mor_map[m])
          return false;
      }
      if (n != m && C.composable(n, m)) {
        Mor h = C.compose(n, m);
        if (mor_map[h] != kNone && D.compose(mor_map[n], mor_map[m]) != mor_map[h]) return false;
      }
    }
    return true;
  }

  bool search_objects(size_t i, const std::vector<Obj>& order,
                      const std::vector<std::vector<Obj>>& candidates) {
    if (i == order.size()) return true;
    Obj a = order[i];
    for (Obj d : candidates[a]) {
      if (obj_used[d]) continue;
      budget.tick();
      obj_map[a] = d;
      obj_used[d] = true;
      // hom-sets completed by this object choice must match in size; their
      // unmapped morphisms become pending assignments
      bool sizes_ok = true;
      std::vector<Mor> pend;
      for (Obj b = 0; b < C.num_objects() && sizes_ok; ++b) {
        if (obj_map[b] == kNone) continue;
        for (auto [x, y] : {std::pair<Obj, Obj>{a, b}, {b, a}}) {
          if (x == y && b != a) continue;
          auto hc = C.hom(x, y);
          if (hc.size() != D.hom(obj_map[x], obj_map[y]).size()) {
            sizes_ok = false;
            break;
          }
          for (Mor m : hc)
            if (mor_map[m] == kNone) pend.push_back(m);
          if (a == b) break;  // (a,a) only once
        }
      }
      if (sizes_ok && match_pending(pend, 0, i + 1, order, candidates)) return true;
      obj_map[a] = kNone;
      obj_used[d] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<FunctorData> find_isomorphism(const CatPtr& cp, const CatPtr& dp,
                                            SearchBudget* budget) {
  const FiniteCategory& C = *cp;
  const FiniteCategory& D = *dp;
  if (C.num_objects() != D.num_objects() || C.num_morphisms() != D.num_morphisms())
    return std::nullopt;
  SearchBudget local;
  SearchBudget& b = budget ? *budget : local;

  std::vector<std::vector<std::pair<int, int>>> profC(C.num_objects()), profD(D.num_objects());
  for (Obj a = 0; a < C.num_objects(); ++a) profC[a] = degree_profile(C, a);
  for (Obj d = 0; d < D.num_objects(); ++d) profD[d] = degree_profile(D, d);

  std::vector<std::vector<Obj>> candidates(C.num_objects());
  for (Obj a = 0; a < C.num_objects(); ++a)
    for (Obj d = 0; d < D.num_objects(); ++d)
      if (profC[a] == profD[d]) candidates[a].push_back(d);
  // Most-constrained object first; ties by index for determinism.
  std::vector<Obj> order(C.num_objects());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Obj x, Obj y) {
    return candidates[x].size() < candidates[y].size();
  });
  for (Obj a = 0; a < C.num_objects(); ++a)
    if (candidates[a].empty()) return std::nullopt;

  IsoSearch s{C, D, b,
              std::vector<Obj>(C.num_objects(), kNone),
              std::vector<bool>(D.num_objects(), false),
              std::vector<Mor>(C.num_morphisms(), kNone),
              std::vector<bool>(D.num_morphisms(), false)};
  if (!s.search_objects(0, order, candidates)) return std::nullopt;
  FunctorData f;
  f.source = cp;
  f.target = dp;
  f.obj_map = s.obj_map;
  f.mor_map = s.mor_map;
  return f;
}

EquivalenceWitness are_equivalent(const CatPtr& c, const CatPtr& d, SearchBudget* budget) {
  auto sk_c = skeleton(c).materialize(c->name + "_sk");
  auto sk_d = skeleton(d).materialize(d->name + "_sk");
  EquivalenceWitness w;
  w.skeleton_iso = find_isomorphism(sk_c.cat, sk_d.cat, budget);
  w.equivalent = w.skeleton_iso.has_value();
  return w;
}

namespace {

struct FunctorEnum {
  const FiniteCategory& C;
  const FiniteCategory& D;
  SearchBudget& budget;
  const std::function<bool(const FunctorData&)>& sink;
  CatPtr cp, dp;
  FunctorData cur;
  long long count = 0;
  bool stopped = false;

  // Non-identity morphisms of C in index order; identities are forced by the
  // object map.
  std::vector<Mor> free_mors;

  bool run() {
    for (Mor m = 0; m < C.num_morphisms(); ++m)
      if (!C.is_identity(m)) free_mors.push_back(m);
    cur.source = cp;
    cur.target = dp;
    cur.obj_map.assign(C.num_objects(), kNone);
    cur.mor_map.assign(C.num_morphisms(), kNone);
    pick_object(0);
    return !stopped;
  }

  void pick_object(Obj a) {
    if (stopped) return;
    if (a == C.num_objects()) {
      for (Obj x = 0; x < C.num_objects(); ++x)
        cur.mor_map[C.identity(x)] = D.identity(cur.obj_map[x]);
      pick_morphism(0);
      return;
    }
    for (Obj d = 0; d < D.num_objects() && !stopped; ++d) {
      budget.tick();
      cur.obj_map[a] = d;
      pick_object(a + 1);
    }
    cur.obj_map[a] = kNone;
  }

  void pick_morphism(size_t i) {
    if (stopped) return;
    if (i == free_mors.size()) {
      ++count;
      if (!sink(cur)) stopped = true;
      return;
    }
    Mor m = free_mors[i];
    for (Mor t : D.hom(cur.obj_map[C.dom(m)], cur.obj_map[C.cod(m)])) {
      budget.tick();
      cur.mor_map[m] = t;
      if (consistent(m)) pick_morphism(i + 1);
      if (stopped) break;
    }
    cur.mor_map[m] = kNone;
  }

  // Composition equations among already-assigned morphisms involving m.
  bool consistent(Mor m) {
    for (Mor n = 0; n < C.num_morphisms(); ++n) {
      if (cur.mor_map[n] == kNone) continue;
      if (C.composable(m, n)) {
        Mor h = C.compose(m, n);
        if (cur.mor_map[h] != kNone &&
            D.compose(cur.mor_map[m], cur.mor_map[n]) != cur.mor_map[h])
          return false;
      }
      if (n != m && C.composable(n, m)) {
        Mor h = C.compose(n, m);
        if (cur.mor_map[h] != kNone &&
            D.compose(cur.mor_map[n], cur.mor_map[m]) != cur.mor_map[h])
          return false;
      }
    }
    return true;
  }
};

}  // namespace

long long enumerate_functors(const CatPtr& c, const CatPtr& d,
                             const std::function<bool(const FunctorData&)>& sink,
                             SearchBudget* budget) {
  SearchBudget local;
  SearchBudget& b = budget ? *budget : local;
  FunctorEnum e{*c, *d, b, sink, c, d, {}};
  e.run();
  return e.count;
}

std::vector<FunctorData> all_functors(const CatPtr& c, const CatPtr& d, SearchBudget* budget) {
  std::vector<FunctorData> out;
  enumerate_functors(c, d, [&](const FunctorData& f) {
    out.push_back(f);
    return true;
  }, budget);
  return out;
}

}  // namespace specat
