#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "specat/reconstruct.hpp"

namespace specat {

// An object of Cat_X: any functor into X. All objects handled here have
// faithful sources, so hom-sets again reduce to object maps.
struct CatOverObject {
  FunctorData F;
};

// F_e : Dis({e}) ↪ X.
CatOverObject point_functor(const CatPtr& X, Obj e);

// F_v for the literal three-morphism subcategory Y_v of X, together with
// Υ_v : F_e ⊔ F_{e'} → F_v. Throws EndomorphismNotClosed when v is an
// endomorphism and {id, v} is not composition-closed (and likewise when the
// subcategory shape would need v's inverse or square).
struct ArrowFunctor {
  CatOverObject F;         // Y_v ↪ X
  CatOverObject disjoint;  // F_e ⊔ F_{e'}
  FunctorData upsilon;     // the inclusion F_e ⊔ F_{e'} → F_v
};
ArrowFunctor arrow_functor(const CatPtr& X, Mor v);

// The finite full subcategory of Cat_X used for the strict reconstruction:
// the empty functor, every F_e, coproducts of points (multisets of size 2
// and 3), a free arrow object A_v per morphism v of X (identities included),
// and the free gluings of every pair of arrow objects along a shared point.
// Unlike the Con_X fragment, all colimits of arrow gluings exist here.
class CatFragment {
 public:
  struct Provenance {
    enum Kind { Empty, Point, Coproduct, ArrowObj, Glued } kind;
    std::vector<Obj> points;
    std::vector<Mor> arrows;
  };

  struct Cop {
    int object = -1;
    std::vector<ObjMap> inj;
  };

  struct CommaObject {
    int F = -1;
    ObjMap ups;
  };

  struct Colimit {
    int P;
    ObjMap p1, p2;
  };

  static CatFragment build(const CatPtr& X);  // NotConnected / SizeBound

  const CatPtr& base() const { return X_; }
  int size() const { return (int)objs_.size(); }
  const CatOverObject& obj(int i) const { return objs_[i]; }
  const Provenance& provenance(int i) const { return prov_[i]; }
  int terminal_object() const { return id_obj_; }

  const std::vector<ObjMap>& hom(int i, int j) const;
  bool is_initial(int i) const;
  bool is_terminal(int i) const;
  bool is_iso(int i, int j, const ObjMap& phi) const;
  bool is_mono(int i, int j, const ObjMap& phi) const;

  // ‡Ob: fragment indices of the minimal objects, one per object of X.
  const std::vector<int>& minimal_objects() const;

  const Cop& coproduct(std::vector<int> point_multiset) const;
  const std::vector<CommaObject>& comma_objects(int mi, int mj) const;
  std::vector<ObjMap> comma_hom(int mi, int mj, const CommaObject& a,
                                const CommaObject& b) const;
  bool comma_isomorphic(int mi, int mj, const CommaObject& a, const CommaObject& b) const;

  // ‡Mor{e,e'}: comma classes per L23 (minimal and unsplittable), modulo the
  // factor swap when mi = mj. Identities and isomorphisms of X are classes
  // here too, unlike the Con_X case.
  const std::vector<CommaObject>& dagger_classes(int mi, int mj) const;

  // L24 criterion: colimit of the gluing of d and d' along the shared point,
  // plus a compatible mono from d''. The s bits pick the source-role factor
  // of each comma object at an equal-endpoint pair (always 0 otherwise).
  bool compose_arrows(int mi, int mj, int mk, const CommaObject& d, int s1,
                      const CommaObject& dp, int s2, const CommaObject& dpp, int s3) const;

  std::optional<Colimit> pushout(int f1, const ObjMap& leg1, int f2, const ObjMap& leg2) const;

  struct ClassRef {
    int cls = -1;
    int s = 0;  // flip of v against the stored class rep (equal endpoints only)
  };

  int point_object(Obj e) const;       // fragment index of F_e
  int class_of_morphism(Mor v) const;  // ζ_{e,e'} applied to v
  ClassRef class_ref(Mor v) const;

 private:
  CatPtr X_;
  std::vector<CatOverObject> objs_;
  std::vector<Provenance> prov_;
  int empty_ = -1;
  int id_obj_ = -1;  // id_X, the terminal object
  std::map<Obj, int> point_of_;
  struct ArrowInfo {
    int object = -1;
    ObjMap inj_dom, inj_cod;  // images of the two endpoint objects
  };
  std::map<Mor, ArrowInfo> arrows_;
  std::map<std::vector<int>, Cop> cops_;

  mutable std::map<std::pair<int, int>, std::vector<ObjMap>> homs_;
  mutable std::vector<int> minimal_;
  mutable bool minimal_done_ = false;
  mutable std::map<std::pair<int, int>, std::vector<CommaObject>> commas_;
  mutable std::map<std::pair<int, int>, std::vector<CommaObject>> daggers_;
  mutable std::map<std::tuple<int, int, ObjMap, ObjMap>, std::optional<Colimit>> colimits_;

  bool satisfies_dagger_criterion(int mi, int mj, const CommaObject& cand) const;
  bool splits(int mi, int mj, const CommaObject& cand) const;
};

// The ‡-data of Theorem T05: one slot per object of X (not per isomorphism
// class) and one class per morphism, with the Com^Cat relation.
struct RecoveredStrict {
  std::vector<int> minimal;  // fragment indices, ascending
  std::map<std::pair<int, int>, int> num_classes;
  // (a, b, c positions, class in {a,b}, class in {b,c}, class in {a,c},
  //  s1, s2, s3 source-role factor bits — nonzero only at equal positions)
  std::map<std::array<int, 9>, bool> rel;
};

RecoveredStrict recover_strict(const CatFragment& frag);

// Assembles a category from the ‡-data; by T05 the result is isomorphic to X
// or X^op. Throws InconsistentOrientation when no table fits.
CatPtr assemble_strict(const RecoveredStrict& rec);

// Isomorphism-level comparison (contrast with compare_categories).
struct CompareStrictResult {
  bool isomorphic = false;
  bool op_isomorphic = false;
  std::optional<FunctorData> witness;
  std::optional<FunctorData> op_witness;
};
CompareStrictResult compare_strict(const CatPtr& A, const CatPtr& B);

struct RoundtripStrictResult {
  CatPtr recovered;
  CompareStrictResult cmp;
  int fragment_size = 0;
  int num_minimal = 0;
  bool ok() const { return cmp.isomorphic || cmp.op_isomorphic; }
};
RoundtripStrictResult roundtrip_strict(const CatPtr& X);

}  // namespace specat
