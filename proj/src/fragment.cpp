#include "specat/fragment.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

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

}  // namespace

Fragment Fragment::build(const CatPtr& X, unsigned seed) {
  if (!is_connected(*X)) throw Error(Errc::NotConnected, "reconstruction requires a connected base");
  auto skel = skeleton(X);
  const std::vector<Obj>& reps = skel.objects;
  int noninv_pairs = 0;
  for (Obj a : reps)
    for (Obj b : reps)
      for (Mor v : X->hom(a, b))
        if (!is_isomorphism(*X, v)) ++noninv_pairs;
  if (X->num_objects() > 12 || X->num_morphisms() > 64 || (int)reps.size() > 4 ||
      noninv_pairs > 10)
    throw Error(Errc::SizeBound, "base category exceeds the supported reconstruction bounds");

  Fragment fr;
  fr.X_ = X;
  fr.objs_.push_back(con_empty(X));
  fr.prov_.push_back({Provenance::Empty, {}, {}});
  fr.empty_ = 0;

  for (Obj e : reps) {
    fr.cover_of_[e] = (int)fr.objs_.size();
    fr.objs_.push_back(point_cover(X, e).con);
    fr.prov_.push_back({Provenance::PointCover, {e}, {}});
  }

  auto add_cop = [&](std::vector<int> covers) {
    std::vector<Obj> bps;
    for (int ci : covers) bps.push_back(fr.prov_[ci].basepoints[0]);
    MultiCover mc = cover_coproduct(X, bps, "cop" + std::to_string(fr.objs_.size()));
    Cop cop;
    cop.object = (int)fr.objs_.size();
    for (const auto& in : mc.inj) cop.inj.push_back(in.obj_map);
    fr.objs_.push_back(mc.con);
    fr.prov_.push_back({Provenance::Coproduct, bps, {}});
    fr.cops_.emplace(std::move(covers), std::move(cop));
  };
  const int k = (int)reps.size();
  auto cover_idx = [&](int r) { return fr.cover_of_.at(reps[r]); };
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) add_cop({cover_idx(a), cover_idx(b)});
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      for (int c = b; c < k; ++c) add_cop({cover_idx(a), cover_idx(b), cover_idx(c)});

  std::vector<Mor> noninv;
  for (Obj a : reps)
    for (Obj b : reps)
      for (Mor v : X->hom(a, b))
        if (!is_isomorphism(*X, v)) noninv.push_back(v);
  std::sort(noninv.begin(), noninv.end());

  for (Mor v : noninv) {
    BridgeData bd =
        make_bridge(X, X->dom(v), X->cod(v), v, "bridge" + std::to_string(fr.objs_.size()));
    BridgeInfo info;
    info.object = (int)fr.objs_.size();
    info.inj_dom = bd.mc.inj[0].obj_map;
    info.inj_cod = bd.mc.inj[1].obj_map;
    fr.objs_.push_back(bd.mc.con);
    fr.prov_.push_back({Provenance::Bridge, {X->dom(v), X->cod(v)}, {{0, 1, v}}});
    fr.bridges_[v] = std::move(info);
  }

  // bridge ⊔ point-cover coproducts: third-leg witnesses for the comma
  // quantifiers
  for (Mor v : noninv)
    for (Obj e : reps) {
      auto mc = make_multicover(X, {X->dom(v), X->cod(v), e}, {{0, 1, v}},
                                "bp" + std::to_string(fr.objs_.size()));
      fr.objs_.push_back(mc->con);
      fr.prov_.push_back({Provenance::Chain, {X->dom(v), X->cod(v), e}, {{0, 1, v}}});
    }

  // two-bridge amalgams: every way of gluing two bridges along a shared
  // point cover (chains, spans, and cospans); chain gluings are skipped when
  // the induced composite is invertible, where no colimit exists
  auto add_amalgam = [&](std::vector<Obj> bps, std::vector<std::tuple<int, int, Mor>> links) {
    auto mc = make_multicover(X, bps, links, "amal" + std::to_string(fr.objs_.size()));
    if (!mc) return;
    fr.objs_.push_back(mc->con);
    fr.prov_.push_back({Provenance::Chain, std::move(bps), std::move(links)});
  };
  for (Mor v : noninv)
    for (Mor w : noninv) {
      if (X->cod(v) == X->dom(w))
        add_amalgam({X->dom(v), X->cod(v), X->cod(w)}, {{0, 1, v}, {1, 2, w}});
      if (v <= w && X->dom(v) == X->dom(w))
        add_amalgam({X->cod(v), X->dom(v), X->cod(w)}, {{1, 0, v}, {1, 2, w}});
      if (v <= w && X->cod(v) == X->cod(w))
        add_amalgam({X->dom(v), X->cod(v), X->dom(w)}, {{0, 1, v}, {2, 1, w}});
    }

  // Forget construction order: shuffle the object list so nothing downstream
  // can key on provenance by position.
  int n = (int)fr.objs_.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> to_new(n);
  for (int i = 0; i < n; ++i) to_new[order[i]] = i;

  std::vector<ConFunctor> objs(n);
  std::vector<Provenance> prov(n);
  for (int i = 0; i < n; ++i) {
    objs[to_new[i]] = std::move(fr.objs_[i]);
    prov[to_new[i]] = std::move(fr.prov_[i]);
  }
  fr.objs_ = std::move(objs);
  fr.prov_ = std::move(prov);
  fr.empty_ = to_new[fr.empty_];
  for (auto& [e, idx] : fr.cover_of_) idx = to_new[idx];
  for (auto& [v, info] : fr.bridges_) info.object = to_new[info.object];
  std::map<std::vector<int>, Cop> cops;
  for (auto& [key, cop] : fr.cops_) {
    std::vector<std::pair<int, ObjMap>> factors;
    for (int p = 0; p < (int)key.size(); ++p) factors.emplace_back(to_new[key[p]], cop.inj[p]);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> nkey;
    Cop ncop;
    ncop.object = to_new[cop.object];
    for (auto& [idx, inj] : factors) {
      nkey.push_back(idx);
      ncop.inj.push_back(std::move(inj));
    }
    cops.emplace(std::move(nkey), std::move(ncop));
  }
  fr.cops_ = std::move(cops);
  return fr;
}

const std::vector<ObjMap>& Fragment::hom(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = homs_.find(key);
  if (it == homs_.end()) it = homs_.emplace(key, hom_over(objs_[i], objs_[j])).first;
  return it->second;
}

bool Fragment::is_initial(int i) const {
  for (int j = 0; j < size(); ++j)
    if (hom(i, j).size() != 1) return false;
  return true;
}

bool Fragment::is_iso(int i, int j, const ObjMap& phi) const {
  for (const ObjMap& psi : hom(j, i))
    if (is_identity_map(compose_obj_maps(psi, phi)) &&
        is_identity_map(compose_obj_maps(phi, psi)))
      return true;
  return false;
}

bool Fragment::is_mono(int, int, const ObjMap& phi) const {
  std::set<Obj> seen;
  for (Obj y : phi)
    if (!seen.insert(y).second) return false;
  return true;
}

bool Fragment::is_mono_honest(int src, int dst, const ObjMap& phi) const {
  (void)dst;
  for (int s = 0; s < size(); ++s) {
    const auto& hs = hom(s, src);
    for (size_t a = 0; a < hs.size(); ++a)
      for (size_t b = a + 1; b < hs.size(); ++b)
        if (compose_obj_maps(phi, hs[a]) == compose_obj_maps(phi, hs[b])) return false;
  }
  return true;
}

const std::vector<int>& Fragment::minimal_objects() const {
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
    if (ok) minimal_.push_back(i);
  }
  minimal_done_ = true;
  return minimal_;
}

const Fragment::Cop& Fragment::coproduct(std::vector<int> multiset) const {
  std::sort(multiset.begin(), multiset.end());
  return cops_.at(multiset);
}

const Fragment::FragAut& Fragment::aut(int m) const {
  auto it = auts_.find(m);
  if (it != auts_.end()) return it->second;
  FragAut a;
  a.elements = hom(m, m);
  int n = (int)a.elements.size();
  a.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    if (is_identity_map(a.elements[i])) a.identity = i;
    for (int j = 0; j < n; ++j) {
      ObjMap c = compose_obj_maps(a.elements[i], a.elements[j]);
      for (int t = 0; t < n; ++t)
        if (a.elements[t] == c) {
          a.table[i][j] = t;
          break;
        }
    }
  }
  a.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.table[i][j] == a.identity && a.table[j][i] == a.identity) a.inverse[i] = j;
  return auts_.emplace(m, std::move(a)).first->second;
}

const std::vector<Fragment::CommaObject>& Fragment::comma_objects(int mi, int mj) const {
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

std::vector<ObjMap> Fragment::comma_hom(int, int, const CommaObject& a,
                                        const CommaObject& b) const {
  std::vector<ObjMap> out;
  for (const ObjMap& psi : hom(a.F, b.F))
    if (compose_obj_maps(psi, a.ups) == b.ups) out.push_back(psi);
  return out;
}

bool Fragment::comma_isomorphic(int mi, int mj, const CommaObject& a,
                                const CommaObject& b) const {
  for (const ObjMap& psi : comma_hom(mi, mj, a, b))
    if (is_iso(a.F, b.F, psi)) return true;
  return false;
}

bool Fragment::splits(int mi, int mj, const CommaObject& cand) const {
  const Cop& cop = coproduct({mi, mj});
  ObjMap li = compose_obj_maps(cand.ups, cop.inj[0]);
  ObjMap lj = compose_obj_maps(cand.ups, cop.inj[1]);
  int ml = std::min(mi, mj), mh = std::max(mi, mj);
  if (cop.inj.size() != 2) return false;
  // factor 0 belongs to the lower-indexed cover
  const ObjMap& leg_i = (mi == ml) ? li : lj;
  const ObjMap& leg_j = (mi == ml) ? lj : li;
  int F = cand.F;
  const auto& FC = *objs_[F].total();
  for (int F0 = 0; F0 < size(); ++F0) {
    int n0 = objs_[F0].total()->num_objects();
    int m0 = objs_[F0].total()->num_morphisms();
    if (n0 > FC.num_objects()) continue;
    for (int F1 = 0; F1 < size(); ++F1) {
      if (n0 + objs_[F1].total()->num_objects() != FC.num_objects()) continue;
      if (m0 + objs_[F1].total()->num_morphisms() != FC.num_morphisms()) continue;
      for (const ObjMap& p0 : hom(F0, F))
        for (const ObjMap& p1 : hom(F1, F)) {
          // [p0, p1] must be an isomorphism from the coproduct: bijective on
          // objects and morphisms
          std::vector<char> hit(FC.num_objects(), 0);
          bool ok = true;
          for (Obj y : p0)
            if (hit[y]++) ok = false;
          for (Obj y : p1)
            if (hit[y]++) ok = false;
          if (!ok) continue;
          FunctorData e0 = expand_over(objs_[F0], objs_[F], p0);
          FunctorData e1 = expand_over(objs_[F1], objs_[F], p1);
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

bool Fragment::satisfies_dagger_criterion(int mi, int mj, const CommaObject& cand) const {
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

const std::vector<Fragment::CommaObject>& Fragment::dagger_classes(int mi, int mj) const {
  auto key = std::make_pair(mi, mj);
  auto it = daggers_.find(key);
  if (it != daggers_.end()) return it->second;
  const auto& co = comma_objects(mi, mj);
  std::optional<ObjMap> sigma;
  if (mi == mj) {
    const Cop& cop = coproduct({mi, mj});
    ObjMap s(objs_[cop.object].total()->num_objects());
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

bool Fragment::compose_with_aut(int mi, int mj, int factor, int aut_index,
                                const CommaObject& d1, const CommaObject& d2, int s2) const {
  const Cop& cop = coproduct({mi, mj});
  int side = (factor == 0) ? std::min(mi, mj) : std::max(mi, mj);
  const FragAut& A = aut(side);
  const ObjMap& w = A.elements[aut_index];
  const ObjMap& winv = A.elements[A.inverse[aut_index]];
  int nc = (int)objs_[cop.object].total()->num_objects();
  std::vector<ObjMap> twists;
  auto add_twist = [&](const ObjMap& g) {
    ObjMap t = identity_map(nc);
    for (int x = 0; x < (int)cop.inj[factor].size(); ++x)
      t[cop.inj[factor][x]] = cop.inj[factor][g[x]];
    if (std::find(twists.begin(), twists.end(), t) == twists.end()) twists.push_back(t);
  };
  add_twist(w);
  add_twist(winv);
  CommaObject target = d2;
  if (s2 == 1) {
    ObjMap sg(nc);
    for (int x = 0; x < (int)cop.inj[0].size(); ++x) {
      sg[cop.inj[0][x]] = cop.inj[1][x];
      sg[cop.inj[1][x]] = cop.inj[0][x];
    }
    target.ups = compose_obj_maps(d2.ups, sg);
  }
  for (const ObjMap& t : twists) {
    CommaObject d1t{d1.F, compose_obj_maps(d1.ups, t)};
    if (comma_isomorphic(mi, mj, d1t, target)) return true;
  }
  return false;
}

std::optional<Fragment::Colimit> Fragment::pushout(int middle, int f1, const ObjMap& leg1,
                                                   int f2, const ObjMap& leg2) const {
  auto key = std::make_tuple(middle, f1, f2, leg1, leg2);
  auto it = colimits_.find(key);
  if (it != colimits_.end()) return it->second;

  int want = objs_[f1].total()->num_objects() + objs_[f2].total()->num_objects() -
             objs_[middle].total()->num_objects();
  std::vector<int> order;
  for (int P = 0; P < size(); ++P)
    if (objs_[P].total()->num_objects() == want) order.push_back(P);
  for (int P = 0; P < size(); ++P)
    if (objs_[P].total()->num_objects() != want) order.push_back(P);

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

bool Fragment::compose_bridges(int mi, int mj, int mk, const CommaObject& d, int s1,
                               const CommaObject& dp, int s2, const CommaObject& dpp,
                               int s3) const {
  const Cop& c1 = coproduct({mi, mj});
  const Cop& c2 = coproduct({mj, mk});
  const Cop& c3 = coproduct({mi, mk});
  // source-role factor of a pair {p,q} read in role p → q
  auto src_factor = [](int p, int q, int s) { return p == q ? s : (p < q ? 0 : 1); };
  int f1 = 1 - src_factor(mi, mj, s1);  // d's mj-role factor
  int f2 = src_factor(mj, mk, s2);      // d''s mj-role factor
  int fi = src_factor(mi, mk, s3);      // d'''s mi-role factor
  int fk = 1 - fi;

  ObjMap l1 = compose_obj_maps(d.ups, c1.inj[f1]);
  ObjMap l2 = compose_obj_maps(dp.ups, c2.inj[f2]);
  auto col = pushout(mj, d.F, l1, dp.F, l2);
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

int Fragment::point_cover_of(Obj e) const {
  auto it = cover_of_.find(e);
  return it == cover_of_.end() ? kNone : it->second;
}

const Fragment::BridgeInfo* Fragment::bridge_info(Mor v) const {
  auto it = bridges_.find(v);
  return it == bridges_.end() ? nullptr : &it->second;
}

Fragment::ClassRef Fragment::class_ref(Mor v) const {
  const BridgeInfo* info = bridge_info(v);
  if (!info) throw Error(Errc::DomainMismatch, "not a non-invertible morphism between representatives");
  int a = point_cover_of(X_->dom(v));
  int b = point_cover_of(X_->cod(v));
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
  ObjMap ups(objs_[cop.object].total()->num_objects());
  for (int x = 0; x < (int)cop.inj[fd].size(); ++x) ups[cop.inj[fd][x]] = info->inj_dom[x];
  for (int x = 0; x < (int)cop.inj[fc].size(); ++x) ups[cop.inj[fc][x]] = info->inj_cod[x];
  CommaObject co{info->object, ups};
  std::optional<ObjMap> sigma;
  if (mi == mj) {
    ObjMap s(ups.size());
    for (int x = 0; x < (int)cop.inj[0].size(); ++x) {
      s[cop.inj[0][x]] = cop.inj[1][x];
      s[cop.inj[1][x]] = cop.inj[0][x];
    }
    sigma = std::move(s);
  }
  const auto& cls = dagger_classes(mi, mj);
  for (int i = 0; i < (int)cls.size(); ++i) {
    if (comma_isomorphic(mi, mj, co, cls[i])) return {i, 0};
    if (sigma) {
      CommaObject cs{co.F, compose_obj_maps(co.ups, *sigma)};
      if (comma_isomorphic(mi, mj, cs, cls[i])) return {i, 1};
    }
  }
  return {kNone, 0};
}

int Fragment::class_of_morphism(Mor v) const { return class_ref(v).cls; }

ConFunctor pushout_bridges(const Fragment& frag, Mor v, Mor v_prime) {
  const auto& X = *frag.base();
  if (X.cod(v) != X.dom(v_prime))
    throw Error(Errc::DomainMismatch, "bridges do not share their middle object");
  const auto* b1 = frag.bridge_info(v);
  const auto* b2 = frag.bridge_info(v_prime);
  if (!b1 || !b2)
    throw Error(Errc::DomainMismatch, "expected non-invertible morphisms between representatives");
  int middle = frag.point_cover_of(X.cod(v));
  auto col = frag.pushout(middle, b1->object, b1->inj_cod, b2->object, b2->inj_dom);
  if (!col) throw Error(Errc::NoColimit, "the bridges admit no amalgam");
  return frag.obj(col->P);
}

bool mono_in_fragment(const Fragment& frag, int src, int dst, const ObjMap& phi) {
  return frag.is_mono_honest(src, dst, phi);
}

}  // namespace specat
