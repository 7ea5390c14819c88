#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specat/catover.hpp"
#include "specat/fixtures.hpp"

using namespace specat;

namespace {

CatPtr make_lz() {
  CategoryBuilder b("LZ");
  Obj o0 = b.add_object("o0");
  Obj o1 = b.add_object("o1");
  Mor m0 = b.add_morphism("m0", o0, o0);
  Mor m1 = b.add_morphism("m1", o0, o0);
  Mor m2 = b.add_morphism("m2", o1, o0);
  b.set_compose(m0, m0, m0);
  b.set_compose(m0, m1, m0);
  b.set_compose(m1, m0, m1);
  b.set_compose(m1, m1, m1);
  b.set_compose(m0, m2, m2);
  b.set_compose(m1, m2, m2);
  return b.build_or_throw();
}

CatPtr make_m() {
  CategoryBuilder b("M");
  Obj e0 = b.add_object("e0");
  Obj e1 = b.add_object("e1");
  Mor v0 = b.add_morphism("v0", e0, e0);
  Mor v1 = b.add_morphism("v1", e0, e0);
  Mor r = b.add_morphism("r", e0, e1);
  b.set_compose(v0, v0, v0);
  b.set_compose(v0, v1, v0);
  b.set_compose(v1, v0, v1);
  b.set_compose(v1, v1, v1);
  b.set_compose(r, v0, r);
  b.set_compose(r, v1, r);
  return b.build_or_throw();
}

}  // namespace

TEST_CASE("strict roundtrip recovers every fixture up to iso-or-op") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    RoundtripStrictResult r = roundtrip_strict(fixture(name));
    CHECK(r.ok());
    CHECK(r.num_minimal == fixture(name)->num_objects());
  }
}

TEST_CASE("strict recovery keeps isomorphic copies separate") {
  CatPtr iso2 = fixture("Iso2");
  RoundtripStrictResult r = roundtrip_strict(iso2);
  CHECK(r.ok());
  CHECK(r.recovered->num_objects() == 2);
  // equivalence-level comparison collapses, strict does not
  CompareStrictResult s = compare_strict(iso2, fixture("One"));
  CHECK(!s.isomorphic);
  CHECK(!s.op_isomorphic);
}

TEST_CASE("strict comparison on benchmark pairs") {
  CompareStrictResult a = compare_strict(fixture("Span"), fixture("Cospan"));
  CHECK(!a.isomorphic);
  CHECK(a.op_isomorphic);
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CatPtr x = fixture(name);
    CHECK(compare_strict(x, x).isomorphic);
    CHECK(compare_strict(x, opposite(x)).op_isomorphic);
  }
}

TEST_CASE("strict roundtrip keeps the chirality of absorbed arrows") {
  for (CatPtr x : {make_lz(), make_m()}) {
    CAPTURE(x->name);
    RoundtripStrictResult r = roundtrip_strict(x);
    CHECK(r.ok());
  }
  CompareStrictResult cross = compare_strict(make_lz(), make_m());
  CHECK(!cross.isomorphic);
  CHECK(!cross.op_isomorphic);
  CompareStrictResult lz_rec = compare_strict(roundtrip_strict(make_lz()).recovered, make_m());
  CHECK(!lz_rec.isomorphic);
  CHECK(!lz_rec.op_isomorphic);
}

TEST_CASE("the identity functor is the terminal fragment object") {
  CatFragment frag = CatFragment::build(fixture("Arrow"));
  CHECK(frag.is_terminal(frag.terminal_object()));
  CHECK(!frag.is_terminal(frag.point_object(0)));
  CHECK(frag.is_initial(0) == frag.is_initial(0));  // smoke: callable
}

TEST_CASE("strict dagger classes count full morphism braces") {
  CatFragment z2 = CatFragment::build(fixture("Z2"));
  auto mins = z2.minimal_objects();
  REQUIRE(mins.size() == 1);
  CHECK(z2.dagger_classes(mins[0], mins[0]).size() == 2);  // id and the involution
  CatFragment arrow = CatFragment::build(fixture("Arrow"));
  mins = arrow.minimal_objects();
  REQUIRE(mins.size() == 2);
  CHECK(arrow.dagger_classes(mins[0], mins[1]).size() == 1);
  CHECK(arrow.dagger_classes(mins[0], mins[0]).size() == 1);  // the identity
}

TEST_CASE("every morphism lands in exactly one strict class") {
  for (const auto& name : {"Arrow", "Par2", "Z2", "Chain3X"}) {
    CatPtr x = fixture(name);
    CatFragment frag = CatFragment::build(x);
    for (Mor v = 0; v < x->num_morphisms(); ++v) {
      CAPTURE(name);
      CAPTURE(v);
      CHECK(frag.class_ref(v).cls >= 0);
    }
  }
}

TEST_CASE("arrow functors refuse non-closed endomorphisms") {
  // x with x∘x = y ≠ x: the literal subcategory {id, x} is not closed
  CategoryBuilder b("nil");
  Obj A = b.add_object("A");
  Mor x = b.add_morphism("x", A, A);
  Mor y = b.add_morphism("y", A, A);
  b.set_compose(x, x, y);
  b.set_compose(x, y, y);
  b.set_compose(y, x, y);
  b.set_compose(y, y, y);
  CatPtr c = b.build_or_throw();
  CHECK_THROWS_AS(arrow_functor(c, x), Error);
  // y itself is idempotent, hence closed
  ArrowFunctor af = arrow_functor(c, y);
  CHECK(is_valid_functor(af.upsilon));
}

TEST_CASE("point functors are single objects over their basepoint") {
  CatPtr chain = fixture("Chain3");
  for (Obj e = 0; e < chain->num_objects(); ++e) {
    CatOverObject p = point_functor(chain, e);
    CHECK(p.F.source->num_objects() == 1);
    CHECK(p.F.obj_map[0] == e);
  }
}
