#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "specat/constructive.hpp"

namespace specat {

// A finite full subcategory of Con_X on which the reconstruction's
// quantifiers are evaluated: the empty object, point covers of all skeleton
// representatives, coproducts of point covers (all multisets of size 2 and
// 3), bridges and self-bridges for every non-invertible morphism between
// representatives, bridge ⊔ point-cover coproducts, and the chain amalgams
// of composable bridge pairs. Hom-sets are enumerated lazily and memoized.
class Fragment {
 public:
  struct Provenance {
    enum Kind { Empty, PointCover, Coproduct, Bridge, Chain } kind;
    std::vector<Obj> basepoints;                   // X-objects of the parts
    std::vector<std::tuple<int, int, Mor>> links;  // connecting morphisms
  };

  struct Cop {
    int object = -1;
    std::vector<ObjMap> inj;  // one per factor, in multiset order
  };

  struct CommaObject {
    int F = -1;
    ObjMap ups;  // the marked morphism coproduct → obj(F)
    bool operator==(const CommaObject& o) const { return F == o.F && ups == o.ups; }
  };

  struct FragAut {
    std::vector<ObjMap> elements;
    std::vector<std::vector<int>> table;  // table[i][j] = elements[i] ∘ elements[j]
    int identity = -1;
    std::vector<int> inverse;
  };

  // Throws NotConnected for disconnected X and SizeBound past desk scale.
  static Fragment build(const CatPtr& X, unsigned seed = 0);

  const CatPtr& base() const { return X_; }
  int size() const { return (int)objs_.size(); }
  const ConFunctor& obj(int i) const { return objs_[i]; }
  const Provenance& provenance(int i) const { return prov_[i]; }
  int empty_object() const { return empty_; }

  const std::vector<ObjMap>& hom(int i, int j) const;

  bool is_initial(int i) const;
  bool is_iso(int i, int j, const ObjMap& phi) const;
  // Honest fragment-relative monomorphism test (left-cancellation against
  // every fragment object).
  bool is_mono_honest(int src, int dst, const ObjMap& phi) const;
  // Fast equivalent: injectivity of the object map. The two agree because the
  // fragment contains a point cover in every groupoid component; the honest
  // variant exists for validation.
  bool is_mono(int src, int dst, const ObjMap& phi) const;

  const std::vector<int>& minimal_objects() const;  // †Ob, ascending

  const Cop& coproduct(std::vector<int> minimal_multiset) const;
  const FragAut& aut(int minimal) const;  // †Aut of a minimal object

  // All comma objects of C_{e,e'} for the unordered pair of minimal objects
  // (mi ≤ mj): pairs (F, Υ) with Υ a non-invertible mono from the coproduct.
  const std::vector<CommaObject>& comma_objects(int mi, int mj) const;
  std::vector<ObjMap> comma_hom(int mi, int mj, const CommaObject& a,
                                const CommaObject& b) const;
  bool comma_isomorphic(int mi, int mj, const CommaObject& a, const CommaObject& b) const;

  // †Mor{e,e'}^≇: representatives of the comma-isomorphism classes (modulo
  // the factor swap when mi = mj) satisfying the minimal-and-unsplittable
  // characterization.
  const std::vector<CommaObject>& dagger_classes(int mi, int mj) const;

  // Mixed composition relation: does d2 (read against its representative,
  // or against the factor-swapped representative when s2 = 1) arise from d1
  // by twisting the chosen coproduct factor with the aut element or its
  // inverse (the exponent stays ambiguous, the twisted factor does not)?
  bool compose_with_aut(int mi, int mj, int factor, int aut_index, const CommaObject& d1,
                        const CommaObject& d2, int s2) const;
  // Chain composition relation over middle mj for the ordered roles
  // mi → mj → mk. Each class representative at an equal-endpoint pair is
  // read with its source role on coproduct factor s (s1, s2, s3 for d, d',
  // d''); for distinct endpoints the factors are fixed by position and the
  // s bit must be 0. The gluing attaches the mj-role legs and asks for a
  // role-compatible mono from d''.
  bool compose_bridges(int mi, int mj, int mk, const CommaObject& d, int s1,
                       const CommaObject& dp, int s2, const CommaObject& dpp, int s3) const;

  // Colimit of obj(f1) ←leg1− middle −leg2→ obj(f2) within the fragment;
  // returns (P, p1, p2) or nullopt.
  struct Colimit {
    int P;
    ObjMap p1, p2;
  };
  std::optional<Colimit> pushout(int middle, int f1, const ObjMap& leg1, int f2,
                                 const ObjMap& leg2) const;

  // The fragment object that is the point cover at the skeleton
  // representative e (X-object index), or kNone.
  int point_cover_of(Obj e) const;

  // Bookkeeping for the bridge of a non-invertible v between representatives.
  struct BridgeInfo {
    int object = -1;
    ObjMap inj_dom, inj_cod;  // cover inclusions into the bridge
  };
  const BridgeInfo* bridge_info(Mor v) const;
  // The dagger class (index into dagger_classes of v's pair) represented by
  // the bridge of v; the correspondence ξ. For equal-endpoint pairs, s tells
  // how the class representative is oriented against v: 0 when its factor 0
  // marks dom(v), 1 when the factor-swapped representative does.
  struct ClassRef {
    int cls = kNone;
    int s = 0;
  };
  ClassRef class_ref(Mor v) const;
  int class_of_morphism(Mor v) const;

 private:
  CatPtr X_;
  std::vector<ConFunctor> objs_;
  std::vector<Provenance> prov_;
  int empty_ = -1;
  std::map<std::vector<int>, Cop> cops_;  // key: sorted cover-object indices
  std::map<Obj, int> cover_of_;           // basepoint → object index
  std::map<Mor, BridgeInfo> bridges_;

  mutable std::map<std::pair<int, int>, std::vector<ObjMap>> homs_;
  mutable std::vector<int> minimal_;
  mutable bool minimal_done_ = false;
  mutable std::map<int, FragAut> auts_;
  mutable std::map<std::pair<int, int>, std::vector<CommaObject>> commas_;
  mutable std::map<std::pair<int, int>, std::vector<CommaObject>> daggers_;
  mutable std::map<std::tuple<int, int, int, ObjMap, ObjMap>, std::optional<Colimit>> colimits_;

  bool satisfies_dagger_criterion(int mi, int mj, const CommaObject& cand) const;
  bool splits(int mi, int mj, const CommaObject& cand) const;
};

// The public pushout of two bridges sharing the middle point cover: returns
// the colimit object within a fragment of Con_X, or throws NoColimit.
ConFunctor pushout_bridges(const Fragment& frag, Mor v, Mor v_prime);

// Honest public monomorphism test used by the validation suite.
bool mono_in_fragment(const Fragment& frag, int src, int dst, const ObjMap& phi);

}  // namespace specat
