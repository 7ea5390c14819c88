#include "specat/catover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace specat {

namespace {

ObjMap identity_map(int n) {
  ObjMap m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

bool is_identity_map(const ObjMap& m) {
  for (int i = 0; i < (int)m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

// The free arrow object A_v: two objects, one generating morphism over v.
// Defined for every v, endomorphisms included (contrast arrow_functor).
CatOverObject free_arrow(const CatPtr& X, Mor v, const std::string& name) {
  CategoryBuilder b(name);
  Obj d = b.add_object("d");
  Obj c = b.add_object("c");
  Mor a = b.add_morphism("a", d, c);
  CatPtr Y = b.build_or_throw();
  FunctorData F;
  F.source = Y;
  F.target = X;
  F.obj_map = {X->dom(v), X->cod(v)};
  F.mor_map.resize(Y->num_morphisms());
  F.mor_map[Y->identity(d)] = X->identity(X->dom(v));
  F.mor_map[Y->identity(c)] = X->identity(X->cod(v));
  F.mor_map[a] = v;
  return {F};
}

CatOverObject discrete_points(const CatPtr& X, const std::vector<Obj>& points,
                              const std::string& name) {
  CategoryBuilder b(name);
  for (size_t i = 0; i < points.size(); ++i) b.add_object("p" + std::to_string(i));
  CatPtr Y = b.build_or_throw();
  FunctorData F;
  F.source = Y;
  F.target = X;
  F.obj_map = points;
  F.mor_map.resize(Y->num_morphisms());
  for (size_t i = 0; i < points.size(); ++i)
    F.mor_map[Y->identity((Obj)i)] = X->identity(points[i]);
  return {F};
}

}  // namespace

CatOverObject point_functor(const CatPtr& X, Obj e) {
  if (e < 0 || e >= X->num_objects())
    throw Error(Errc::UnknownObject, "no such object in the base category");
  return discrete_points(X, {e}, "point_" + X->object_names[e]);
}

ArrowFunctor arrow_functor(const CatPtr& X, Mor v) {
  Obj e = X->dom(v), ep = X->cod(v);
  ArrowFunctor out;
  if (e == ep) {
    Mor vv = X->compose(v, v);
    if (vv != X->identity(e) && vv != v)
      throw Error(Errc::EndomorphismNotClosed,
                  "{id, v} is not composition-closed for this endomorphism");
    CategoryBuilder b("Y_" + X->morphism_names[v]);
    Obj o = b.add_object(X->object_names[e]);
    FunctorData F;
    if (X->is_identity(v)) {
      CatPtr Y = b.build_or_throw();
      F = {Y, X, {e}, {X->identity(e)}};
    } else {
      Mor m = b.add_morphism(X->morphism_names[v], o, o);
      b.set_compose(m, m, vv == v ? m : b.identity_of(o));
      CatPtr Y = b.build_or_throw();
      F.source = Y;
      F.target = X;
      F.obj_map = {e};
      F.mor_map.resize(Y->num_morphisms());
      F.mor_map[Y->identity(o)] = X->identity(e);
      F.mor_map[m] = v;
    }
    out.F = {F};
    out.disjoint = discrete_points(X, {e, ep}, "dis2");
    out.upsilon = {out.disjoint.F.source, F.source, {0, 0},
                   {F.source->identity(0), F.source->identity(0)}};
    return out;
  }
  CategoryBuilder b("Y_" + X->morphism_names[v]);
  Obj od = b.add_object(X->object_names[e]);
  Obj oc = b.add_object(X->object_names[ep]);
  Mor m = b.add_morphism(X->morphism_names[v], od, oc);
  CatPtr Y = b.build_or_throw();
  FunctorData F;
  F.source = Y;
  F.target = X;
  F.obj_map = {e, ep};
  F.mor_map.resize(Y->num_morphisms());
  F.mor_map[Y->identity(od)] = X->identity(e);
  F.mor_map[Y->identity(oc)] = X->identity(ep);
  F.mor_map[m] = v;
  out.F = {F};
  out.disjoint = discrete_points(X, {e, ep}, "dis2");
  out.upsilon = {out.disjoint.F.source, Y, {od, oc},
                 {Y->identity(od), Y->identity(oc)}};
  return out;
}

CatFragment CatFragment::build(const CatPtr& X) {
  if (!is_connected(*X)) throw Error(Errc::NotConnected, "strict reconstruction requires a connected base");
  if (X->num_objects() > 6 || X->num_morphisms() > 14)
    throw Error(Errc::SizeBound, "base category exceeds the supported strict-reconstruction bounds");

  CatFragment fr;
  fr.X_ = X;
  fr.objs_.push_back(discrete_points(X, {}, "empty"));
  fr.prov_.push_back({Provenance::Empty, {}, {}});
  fr.empty_ = 0;

  for (Obj e = 0; e < X->num_objects(); ++e) {
    fr.point_of_[e] = (int)fr.objs_.size();
    fr.objs_.push_back(point_functor(X, e));
    fr.prov_.push_back({Provenance::Point, {e}, {}});
  }

  auto add_cop = [&](std::vector<int> pts) {
    std::vector<Obj> es;
    for (int p : pts) es.push_back(fr.prov_[p].points[0]);
    Cop cop;
    cop.object = (int)fr.objs_.size();
    for (int i = 0; i < (int)pts.size(); ++i) cop.inj.push_back({i});
    fr.objs_.push_back(discrete_points(X, es, "cop" + std::to_string(fr.objs_.size())));
    fr.prov_.push_back({Provenance::Coproduct, es, {}});
    fr.cops_.emplace(std::move(pts), std::move(cop));
  };
  int n = X->num_objects();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = a; b < n; ++b) add_cop({fr.point_of_[a], fr.point_of_[b]});
  for (Obj a = 0; a < n; ++a)
    for (Obj b = a; b < n; ++b)
      for (Obj c = b; c < n; ++c) add_cop({fr.point_of_[a], fr.point_of_[b], fr.point_of_[c]});

  for (Mor v = 0; v < X->num_morphisms(); ++v) {
    ArrowInfo info;
    info.object = (int)fr.objs_.size();
    info.inj_dom = {0};
    info.inj_cod = {1};
    fr.objs_.push_back(free_arrow(X, v, "arrow" + std::to_string(v)));
    fr.prov_.push_back({Provenance::ArrowObj, {X->dom(v), X->cod(v)}, {v}});
    fr.arrows_[v] = info;
  }

  // free gluings of two arrows along a shared point (chain: the composite is
  // a fresh generator, so the colimit exists for every pair)
  auto add_glued = [&](const std::vector<Obj>& ob, Obj dom1, Obj cod1, Mor v1, Obj dom2,
                       Obj cod2, Mor v2, std::optional<Mor> comp) {
    CategoryBuilder b("glued" + std::to_string(fr.objs_.size()));
    for (size_t i = 0; i < ob.size(); ++i) b.add_object("g" + std::to_string(i));
    Mor a = b.add_morphism("a", dom1, cod1);
    Mor bb = b.add_morphism("b", dom2, cod2);
    Mor cm = kNone;
    if (comp) {
      cm = b.add_morphism("c", dom1, cod2);
      b.set_compose(bb, a, cm);
    }
    CatPtr Y = b.build_or_throw();
    FunctorData F;
    F.source = Y;
    F.target = X;
    for (Obj o : ob) F.obj_map.push_back(o);
    F.mor_map.resize(Y->num_morphisms());
    for (size_t i = 0; i < ob.size(); ++i) F.mor_map[Y->identity((Obj)i)] = X->identity(ob[i]);
    F.mor_map[a] = v1;
    F.mor_map[bb] = v2;
    if (comp) F.mor_map[cm] = *comp;
    fr.objs_.push_back({F});
    fr.prov_.push_back({Provenance::Glued, ob, {v1, v2}});
  };
  for (Mor v = 0; v < X->num_morphisms(); ++v)
    for (Mor w = 0; w < X->num_morphisms(); ++w) {
      if (X->cod(v) == X->dom(w))
        add_glued({X->dom(v), X->cod(v), X->cod(w)}, 0, 1, v, 1, 2, w, X->compose(w, v));
      if (v <= w && X->dom(v) == X->dom(w))
        add_glued({X->cod(v), X->dom(v), X->cod(w)}, 1, 0, v, 1, 2, w, std::nullopt);
      if (v <= w && X->cod(v) == X->cod(w))
        add_glued({X->dom(v), X->cod(v), X->dom(w)}, 0, 1, v, 2, 1, w, std::nullopt);
    }

  fr.id_obj_ = (int)fr.objs_.size();
  fr.objs_.push_back({identity_functor(X)});
  fr.prov_.push_back({Provenance::Glued, {}, {}});
  return fr;
}

const std::vector<ObjMap>& CatFragment::hom(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = homs_.find(key);
  if (it == homs_.end())
    it = homs_.emplace(key, faithful_hom_over(objs_[i].F, objs_[j].F)).first;
  return it->second;
}

bool CatFragment::is_initial(int i) const {
  for (int j = 0; j < size(); ++j)
    if (hom(i, j).size() != 1) return false;
  return true;
}

bool CatFragment::is_terminal(int i) const {
  for (int j = 0; j < size(); ++j)
    if (hom(j, i).size() != 1) return false;
  return true;
}

bool CatFragment::is_iso(int i, int j, const ObjMap& phi) const {
  for (const ObjMap& psi : hom(j, i))
    if (is_identity_map(compose_obj_maps(psi, phi)) &&
        is_identity_map(compose_obj_maps(phi, psi)))
      return true;
  return false;
}

bool CatFragment::is_mono(int, int, const ObjMap& phi) const {
  std::set<Obj> seen;
  for (Obj y : phi)
    if (!seen.insert(y).second) return false;
  return true;
}

const std::vector<int>& CatFragment::minimal_objects() const {
  if (minimal_done_) return minimal_;
  std::vector<char> initial(size());
  for (int i = 0; i < size(); ++i) initial[i] = is_initial(i);
  for (int i = 0; i < size(); ++i) {
    if (initial[i]) continue;
    bool ok = true;
    for (int s = 0; s < size() && ok; ++s) {
      if (initial[s]) continue;
      for (const ObjMap& phi : hom(s, i))
        if (is_mono(s, i, phi) && !is_iso(s, i, phi)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    // one representative per isomorphism class (id_X duplicates a point when
    // the base is trivial)
    bool dup = false;
    for (int m : minimal_) {
      for (const ObjMap& phi : hom(m, i))
        if (is_iso(m, i, phi)) {
          dup = true;
          break;
        }
      if (dup) break;
    }
    if (!dup) minimal_.push_back(i);
  }
  minimal_done_ = true;
  return minimal_;
}

const CatFragment::Cop& CatFragment::coproduct(std::vector<int> multiset) const {
  std::sort(multiset.begin(), multiset.end());
  return cops_.at(multiset);
}

const std::vector<CatFragment::CommaObject>& CatFragment::comma_objects(int mi, int mj) const {
  auto key = std::make_pair(mi, mj);
  auto it = commas_.find(key);
  if (it != commas_.end()) return it->second;
  const Cop& cop = coproduct({mi, mj});
  std::vector<CommaObject> out;
  for (int F = 0; F < size(); ++F)
    for (const ObjMap& ups : hom(cop.object, F))
      if (is_mono(cop.object, F, ups) && !is_iso(cop.object, F, ups))
        out.push_back({F, ups});
  return commas_.emplace(key, std::move(out)).first->second;
}

std::vector<ObjMap> CatFragment::comma_hom(int, int, const CommaObject& a,
                                           const CommaObject& b) const {
  std::vector<ObjMap> out;
  for (const ObjMap& psi : hom(a.F, b.F))
    if (compose_obj_maps(psi, a.ups) == b.ups) out.push_back(psi);
  return out;
}

bool CatFragment::comma_isomorphic(int mi, int mj, const CommaObject& a,
                                   const CommaObject& b) const {
  for (const ObjMap& psi : comma_hom(mi, mj, a, b))
    if (is_iso(a.F, b.F, psi)) return true;
  return false;
}

bool CatFragment::splits(int mi, int mj, const CommaObject& cand) const {
  const Cop& cop = coproduct({mi, mj});
  ObjMap li = compose_obj_maps(cand.ups, cop.inj[0]);
  ObjMap lj = compose_obj_maps(cand.ups, cop.inj[1]);
  int ml = std::min(mi, mj), mh = std::max(mi, mj);
  const ObjMap& leg_i = (mi == ml) ? li : lj;
  const ObjMap& leg_j = (mi == ml) ? lj : li;
  int F = cand.F;
  const auto& FC = *objs_[F].F.source;
  for (int F0 = 0; F0 < size(); ++F0) {
    int n0 = objs_[F0].F.source->num_objects();
    int m0 = objs_[F0].F.source->num_morphisms();
    if (n0 > FC.num_objects()) continue;
    for (int F1 = 0; F1 < size(); ++F1) {
      if (n0 + objs_[F1].F.source->num_objects() != FC.num_objects()) continue;
      if (m0 + objs_[F1].F.source->num_morphisms() != FC.num_morphisms()) continue;
      for (const ObjMap& p0 : hom(F0, F))
        for (const ObjMap& p1 : hom(F1, F)) {
          std::vector<char> hit(FC.num_objects(), 0);
          bool ok = true;
          for (Obj y : p0)
            if (hit[y]++) ok = false;
          for (Obj y : p1)
            if (hit[y]++) ok = false;
          if (!ok) continue;
          FunctorData e0 = faithful_expand_over(objs_[F0].F, objs_[F].F, p0);
          FunctorData e1 = faithful_expand_over(objs_[F1].F, objs_[F].F, p1);
          std::vector<char> mhit(FC.num_morphisms(), 0);
          for (Mor y : e0.mor_map)
            if (mhit[y]++) ok = false;
          for (Mor y : e1.mor_map)
            if (mhit[y]++) ok = false;
          if (!ok || (int)std::count(mhit.begin(), mhit.end(), 1) != FC.num_morphisms())
            continue;
          bool leg0 = false, leg1 = false;
          for (const ObjMap& u0 : hom(ml, F0))
            if (compose_obj_maps(p0, u0) == leg_i) {
              leg0 = true;
              break;
            }
          if (!leg0) continue;
          for (const ObjMap& u1 : hom(mh, F1))
            if (compose_obj_maps(p1, u1) == leg_j) {
              leg1 = true;
              break;
            }
          if (leg1) return true;
        }
    }
  }
  return false;
}

bool CatFragment::satisfies_dagger_criterion(int mi, int mj, const CommaObject& cand) const {
  const auto& co = comma_objects(mi, mj);
  auto comma_initial = [&](const CommaObject& a) {
    for (const auto& t : co)
      if (comma_hom(mi, mj, a, t).size() != 1) return false;
    return true;
  };
  if (comma_initial(cand)) return false;
  auto comma_mono = [&](const CommaObject& t, const ObjMap& psi) {
    for (const auto& s : co) {
      auto hs = comma_hom(mi, mj, s, t);
      for (size_t a = 0; a < hs.size(); ++a)
        for (size_t b = a + 1; b < hs.size(); ++b)
          if (compose_obj_maps(psi, hs[a]) == compose_obj_maps(psi, hs[b])) return false;
    }
    return true;
  };
  for (const auto& t : co) {
    if (comma_initial(t)) continue;
    for (const ObjMap& psi : comma_hom(mi, mj, t, cand)) {
      if (!comma_mono(t, psi)) continue;
      if (!is_iso(t.F, cand.F, psi)) return false;
    }
  }
  return !splits(mi, mj, cand);
}

const std::vector<CatFragment::CommaObject>& CatFragment::dagger_classes(int mi, int mj) const {
  auto key = std::make_pair(mi, mj);
  auto it = daggers_.find(key);
  if (it != daggers_.end()) return it->second;
  const auto& co = comma_objects(mi, mj);
  std::optional<ObjMap> sigma;
  if (mi == mj) {
    const Cop& cop = coproduct({mi, mj});
    ObjMap s(objs_[cop.object].F.source->num_objects());
    for (int x = 0; x < (int)cop.inj[0].size(); ++x) {
      s[cop.inj[0][x]] = cop.inj[1][x];
      s[cop.inj[1][x]] = cop.inj[0][x];
    }
    sigma = std::move(s);
  }
  std::vector<CommaObject> reps;
  for (const auto& c : co) {
    bool dup = false;
    for (const auto& r : reps) {
      if (comma_isomorphic(mi, mj, c, r)) {
        dup = true;
        break;
      }
      if (sigma) {
        CommaObject cs{c.F, compose_obj_maps(c.ups, *sigma)};
        if (comma_isomorphic(mi, mj, cs, r)) {
          dup = true;
          break;
        }
      }
    }
    if (!dup) reps.push_back(c);
  }
  std::vector<CommaObject> out;
  for (const auto& r : reps)
    if (satisfies_dagger_criterion(mi, mj, r)) out.push_back(r);
  return daggers_.emplace(key, std::move(out)).first->second;
}

std::optional<CatFragment::Colimit> CatFragment::pushout(int f1, const ObjMap& leg1, int f2,
                                                         const ObjMap& leg2) const {
  auto key = std::make_tuple(f1, f2, leg1, leg2);
  auto it = colimits_.find(key);
  if (it != colimits_.end()) return it->second;

  int want =
      objs_[f1].F.source->num_objects() + objs_[f2].F.source->num_objects() - 1;
  std::vector<int> order;
  for (int P = 0; P < size(); ++P)
    if (objs_[P].F.source->num_objects() == want) order.push_back(P);
  for (int P = 0; P < size(); ++P)
    if (objs_[P].F.source->num_objects() != want) order.push_back(P);

  std::optional<Colimit> result;
  for (int P : order) {
    for (const ObjMap& p1 : hom(f1, P)) {
      for (const ObjMap& p2 : hom(f2, P)) {
        if (compose_obj_maps(p1, leg1) != compose_obj_maps(p2, leg2)) continue;
        bool ok = true;
        for (int T = 0; T < size() && ok; ++T) {
          for (const ObjMap& q1 : hom(f1, T)) {
            for (const ObjMap& q2 : hom(f2, T)) {
              if (compose_obj_maps(q1, leg1) != compose_obj_maps(q2, leg2)) continue;
              int cnt = 0;
              for (const ObjMap& h : hom(P, T))
                if (compose_obj_maps(h, p1) == q1 && compose_obj_maps(h, p2) == q2) ++cnt;
              if (cnt != 1) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
        }
        if (ok) {
          result = Colimit{P, p1, p2};
          break;
        }
      }
      if (result) break;
    }
    if (result) break;
  }
  colimits_.emplace(std::move(key), result);
  return result;
}

bool CatFragment::compose_arrows(int mi, int mj, int mk, const CommaObject& d, int s1,
                                 const CommaObject& dp, int s2, const CommaObject& dpp,
                                 int s3) const {
  const Cop& c1 = coproduct({mi, mj});
  const Cop& c2 = coproduct({mj, mk});
  const Cop& c3 = coproduct({mi, mk});
  // which coproduct factor plays the source role of a morphism p→q
  auto src_factor = [](int p, int q, int s) { return p == q ? s : (p < q ? 0 : 1); };
  int f1 = 1 - src_factor(mi, mj, s1);  // d's mj-role factor
  int f2 = src_factor(mj, mk, s2);      // d''s mj-role factor
  int fi = src_factor(mi, mk, s3);      // d'''s mi-role factor
  int fk = 1 - fi;

  ObjMap l1 = compose_obj_maps(d.ups, c1.inj[f1]);
  ObjMap l2 = compose_obj_maps(dp.ups, c2.inj[f2]);
  auto col = pushout(d.F, l1, dp.F, l2);
  if (!col) return false;
  ObjMap L1 = compose_obj_maps(col->p1, compose_obj_maps(d.ups, c1.inj[1 - f1]));
  ObjMap L2 = compose_obj_maps(col->p2, compose_obj_maps(dp.ups, c2.inj[1 - f2]));
  ObjMap gi = compose_obj_maps(dpp.ups, c3.inj[fi]);
  ObjMap gk = compose_obj_maps(dpp.ups, c3.inj[fk]);
  for (const ObjMap& m : hom(dpp.F, col->P))
    if (is_mono(dpp.F, col->P, m) && compose_obj_maps(m, gi) == L1 &&
        compose_obj_maps(m, gk) == L2)
      return true;
  return false;
}

int CatFragment::point_object(Obj e) const {
  auto it = point_of_.find(e);
  return it == point_of_.end() ? kNone : it->second;
}

CatFragment::ClassRef CatFragment::class_ref(Mor v) const {
  auto it = arrows_.find(v);
  if (it == arrows_.end()) throw Error(Errc::UnknownObject, "no such morphism");
  const ArrowInfo& info = it->second;
  int a = point_object(X_->dom(v));
  int b = point_object(X_->cod(v));
  int mi = std::min(a, b), mj = std::max(a, b);
  const Cop& cop = coproduct({mi, mj});
  int fd, fc;
  if (a == b) {
    fd = 0;
    fc = 1;
  } else {
    fd = (a == mi) ? 0 : 1;
    fc = 1 - fd;
  }
  ObjMap ups(2);
  ups[cop.inj[fd][0]] = info.inj_dom[0];
  ups[cop.inj[fc][0]] = info.inj_cod[0];
  CommaObject co{info.object, ups};
  const auto& cls = dagger_classes(mi, mj);
  for (int i = 0; i < (int)cls.size(); ++i) {
    if (comma_isomorphic(mi, mj, co, cls[i])) return {i, 0};
    if (mi == mj) {
      CommaObject cs{co.F, compose_obj_maps(co.ups, ObjMap{1, 0})};
      if (comma_isomorphic(mi, mj, cs, cls[i])) return {i, 1};
    }
  }
  return {kNone, 0};
}

int CatFragment::class_of_morphism(Mor v) const { return class_ref(v).cls; }

RecoveredStrict recover_strict(const CatFragment& frag) {
  RecoveredStrict rec;
  rec.minimal = frag.minimal_objects();
  int k = (int)rec.minimal.size();
  auto classes = [&](int i, int j) -> const std::vector<CatFragment::CommaObject>& {
    return frag.dagger_classes(rec.minimal[std::min(i, j)], rec.minimal[std::max(i, j)]);
  };
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) rec.num_classes[{i, j}] = (int)classes(i, j).size();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const auto& c1 = classes(a, b);
        const auto& c2 = classes(b, c);
        const auto& c3 = classes(a, c);
        int n1 = (a == b) ? 2 : 1, n2 = (b == c) ? 2 : 1, n3 = (a == c) ? 2 : 1;
        for (int d = 0; d < (int)c1.size(); ++d)
          for (int dp = 0; dp < (int)c2.size(); ++dp)
            for (int dpp = 0; dpp < (int)c3.size(); ++dpp)
              for (int s1 = 0; s1 < n1; ++s1)
                for (int s2 = 0; s2 < n2; ++s2)
                  for (int s3 = 0; s3 < n3; ++s3)
                    rec.rel[{a, b, c, d, dp, dpp, s1, s2, s3}] =
                        frag.compose_arrows(rec.minimal[a], rec.minimal[b], rec.minimal[c],
                                            c1[d], s1, c2[dp], s2, c3[dpp], s3);
      }
  return rec;
}

namespace {

struct StrictMor {
  int i, j, idx;  // pair (i ≤ j), class index
  Obj dom, cod;
  int flip;  // equal-endpoint classes: 1 if realized opposite to the class rep
};

struct StrictCand {
  const RecoveredStrict& rec;
  int k;
  std::vector<StrictMor> mors;
  std::map<std::pair<int, int>, std::vector<int>> cls_mor;
  std::vector<std::vector<int>> comp;
};

bool strict_assoc(const StrictCand& cand) {
  int M = (int)cand.mors.size();
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (cand.mors[h].dom != cand.mors[g].cod) continue;
      int hg = cand.comp[h][g];
      for (int f = 0; f < M; ++f) {
        if (cand.mors[g].dom != cand.mors[f].cod) continue;
        int gf = cand.comp[g][f];
        if (hg < 0 || gf < 0) continue;
        int l = cand.comp[h][gf];
        int r = cand.comp[hg][f];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

bool strict_verify(const StrictCand& cand) {
  // A morphism m "runs x→y with bit s": for x ≠ y its endpoints decide; for
  // x == y its flip against the class rep must equal s (forward reading) or
  // 1−s (backward reading).
  auto runs_fwd = [&](int m, int x, int y, int s) {
    if (x == y) return cand.mors[m].flip == s;
    return cand.mors[m].dom == x && cand.mors[m].cod == y && s == 0;
  };
  auto runs_bwd = [&](int m, int x, int y, int s) {
    if (x == y) return cand.mors[m].flip == 1 - s;
    return cand.mors[m].dom == y && cand.mors[m].cod == x && s == 0;
  };
  for (const auto& [key, val] : cand.rec.rel) {
    auto [a, b, c, d, dp, dpp, s1, s2, s3] = key;
    int m1 = cand.cls_mor.at({std::min(a, b), std::max(a, b)})[d];
    int m2 = cand.cls_mor.at({std::min(b, c), std::max(b, c)})[dp];
    int m3 = cand.cls_mor.at({std::min(a, c), std::max(a, c)})[dpp];
    bool got = (runs_fwd(m1, a, b, s1) && runs_fwd(m2, b, c, s2) && runs_fwd(m3, a, c, s3) &&
                cand.comp[m2][m1] == m3) ||
               (runs_bwd(m1, a, b, s1) && runs_bwd(m2, b, c, s2) && runs_bwd(m3, a, c, s3) &&
                cand.comp[m1][m2] == m3);
    if (got != val) return false;
  }
  return true;
}

std::optional<CatPtr> strict_realize(const StrictCand& cand) {
  int M = (int)cand.mors.size();
  // identities: the unique two-sided neutral endo per object
  std::vector<int> ident(cand.k, -1);
  for (int a = 0; a < cand.k; ++a) {
    for (int m = 0; m < M; ++m) {
      if (cand.mors[m].dom != a || cand.mors[m].cod != a) continue;
      bool neutral = true;
      for (int f = 0; f < M && neutral; ++f) {
        if (cand.mors[f].cod == a && cand.comp[m][f] != f) neutral = false;
        if (cand.mors[f].dom == a && cand.comp[f][m] != f) neutral = false;
      }
      if (neutral) {
        if (ident[a] != -1) return std::nullopt;
        ident[a] = m;
      }
    }
    if (ident[a] == -1) return std::nullopt;
  }
  CategoryBuilder bld("recovered_strict");
  std::vector<Obj> objs;
  for (int i = 0; i < cand.k; ++i) objs.push_back(bld.add_object("e" + std::to_string(i)));
  std::vector<Mor> mid(M);
  for (int m = 0; m < M; ++m) {
    const StrictMor& sm = cand.mors[m];
    if (ident[sm.dom] == m && sm.dom == sm.cod) {
      mid[m] = bld.identity_of(objs[sm.dom]);
      continue;
    }
    mid[m] = bld.add_morphism("v" + std::to_string(sm.i) + "_" + std::to_string(sm.j) + "_" +
                                  std::to_string(sm.idx),
                              objs[sm.dom], objs[sm.cod]);
  }
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (cand.comp[g][f] < 0) continue;
      if (g == ident[cand.mors[g].dom] && cand.mors[g].dom == cand.mors[g].cod) continue;
      if (f == ident[cand.mors[f].dom] && cand.mors[f].dom == cand.mors[f].cod) continue;
      bld.set_compose(mid[g], mid[f], mid[cand.comp[g][f]]);
    }
  ValidationReport report;
  CatPtr result = bld.build(report);
  if (!report.ok()) return std::nullopt;
  return result;
}

}  // namespace

CatPtr assemble_strict(const RecoveredStrict& rec) {
  int k = (int)rec.minimal.size();
  int bits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) bits += rec.num_classes.at({i, j});

  for (long long mask = 0; mask < (1LL << bits); ++mask) {
    StrictCand cand{rec, k, {}, {}, {}};
    int bit = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        auto key = std::make_pair(i, j);
        int nc = rec.num_classes.at(key);
        auto& v = cand.cls_mor[key];
        for (int c = 0; c < nc; ++c) {
          int b = (int)((mask >> bit++) & 1);
          v.push_back((int)cand.mors.size());
          if (i == j)
            cand.mors.push_back({i, j, c, i, i, b});
          else
            cand.mors.push_back({i, j, c, b == 0 ? i : j, b == 0 ? j : i, 0});
        }
      }
    int M = (int)cand.mors.size();
    cand.comp.assign(M, std::vector<int>(M, -2));
    std::vector<std::pair<int, int>> entries;
    std::vector<std::vector<int>> choices;
    bool feasible = true;
    for (int g = 0; g < M && feasible; ++g)
      for (int f = 0; f < M && feasible; ++f) {
        if (cand.mors[g].dom != cand.mors[f].cod) continue;
        cand.comp[g][f] = -1;
        int a = cand.mors[f].dom, b = cand.mors[f].cod, c = cand.mors[g].cod;
        int s1 = (a == b) ? cand.mors[f].flip : 0;
        int s2 = (b == c) ? cand.mors[g].flip : 0;
        std::vector<int> opts;
        const auto& target = cand.cls_mor.at({std::min(a, c), std::max(a, c)});
        for (int dpp = 0; dpp < (int)target.size(); ++dpp) {
          int m3 = target[dpp];
          if (a != c && (cand.mors[m3].dom != a || cand.mors[m3].cod != c)) continue;
          int s3 = (a == c) ? cand.mors[m3].flip : 0;
          if (rec.rel.at({a, b, c, cand.mors[f].idx, cand.mors[g].idx, dpp, s1, s2, s3}))
            opts.push_back(m3);
        }
        if (opts.empty()) feasible = false;
        entries.emplace_back(g, f);
        choices.push_back(std::move(opts));
      }
    if (!feasible) continue;

    std::optional<CatPtr> found;
    std::function<bool(size_t)> dfs = [&](size_t at) -> bool {
      if (at == entries.size()) {
        if (!strict_verify(cand)) return false;
        auto built = strict_realize(cand);
        if (!built) return false;
        found = built;
        return true;
      }
      auto [g, f] = entries[at];
      for (int choice : choices[at]) {
        cand.comp[g][f] = choice;
        if (strict_assoc(cand) && dfs(at + 1)) return true;
        cand.comp[g][f] = -1;
      }
      return false;
    };
    if (dfs(0)) return *found;
  }
  throw Error(Errc::InconsistentOrientation,
              "no composition table is consistent with the recovered strict relations");
}

CompareStrictResult compare_strict(const CatPtr& A, const CatPtr& B) {
  if (!is_connected(*A) || !is_connected(*B))
    throw Error(Errc::NotConnected, "comparison requires connected categories");
  CompareStrictResult out;
  if (auto w = find_isomorphism(A, B)) {
    out.isomorphic = true;
    out.witness = *w;
  }
  if (auto w = find_isomorphism(opposite(A), B)) {
    out.op_isomorphic = true;
    out.op_witness = *w;
  }
  return out;
}

RoundtripStrictResult roundtrip_strict(const CatPtr& X) {
  CatFragment frag = CatFragment::build(X);
  RecoveredStrict rec = recover_strict(frag);
  CatPtr recovered = assemble_strict(rec);
  RoundtripStrictResult out;
  out.recovered = recovered;
  out.fragment_size = frag.size();
  out.num_minimal = (int)rec.minimal.size();
  out.cmp = compare_strict(X, recovered);
  return out;
}

}  // namespace specat
