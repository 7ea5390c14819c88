#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specat/fixtures.hpp"
#include "specat/reconstruct.hpp"

using namespace specat;

namespace {

// two left-zero endos and an arrow absorbed into them
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

// the same left-zero monoid but with the extra arrow leaving instead
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

TEST_CASE("roundtrip recovers every fixture up to equivalence-or-op") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    RoundtripResult r = roundtrip(fixture(name));
    CHECK(r.ok());
    CHECK(r.num_minimal >= 1);
  }
}

TEST_CASE("roundtrip is seed independent") {
  CatPtr x = fixture("Chain3X");
  for (unsigned seed : {0u, 1u, 42u}) {
    CAPTURE(seed);
    CHECK(roundtrip(x, seed).ok());
  }
}

TEST_CASE("recovered data is deterministic for a fixed seed") {
  CatPtr x = fixture("Par2");
  Fragment f1 = Fragment::build(x, 5);
  Fragment f2 = Fragment::build(x, 5);
  RecoveredData r1 = recover(f1);
  RecoveredData r2 = recover(f2);
  CHECK(r1.minimal == r2.minimal);
  CHECK(r1.num_classes == r2.num_classes);
  CHECK(r1.rel_aut == r2.rel_aut);
  CHECK(r1.rel_chain == r2.rel_chain);
}

TEST_CASE("fragment minimal objects collapse isomorphic copies") {
  Fragment iso2 = Fragment::build(fixture("Iso2"));
  CHECK(iso2.minimal_objects().size() == 1);
  Fragment chain = Fragment::build(fixture("Chain3"));
  CHECK(chain.minimal_objects().size() == 3);
}

TEST_CASE("dagger class counts equal non-invertible morphism counts") {
  Fragment par = Fragment::build(fixture("Par2"));
  auto mins = par.minimal_objects();
  REQUIRE(mins.size() == 2);
  CHECK(par.dagger_classes(mins[0], mins[1]).size() == 2);
  Fragment arrow = Fragment::build(fixture("Arrow"));
  mins = arrow.minimal_objects();
  REQUIRE(mins.size() == 2);
  CHECK(arrow.dagger_classes(mins[0], mins[1]).size() == 1);
  CHECK(arrow.dagger_classes(mins[0], mins[0]).empty());
}

TEST_CASE("disconnected bases are refused") {
  CategoryBuilder b("disc");
  b.add_object("A");
  b.add_object("B");
  CatPtr c = b.build_or_throw();
  CHECK_THROWS_AS(Fragment::build(c), Error);
  CHECK_THROWS_AS(compare_categories(c, c), Error);
}

TEST_CASE("comparison distinguishes chirality of one-object monoid actions") {
  CatPtr lz = make_lz();
  CatPtr m = make_m();
  CompareResult c = compare_categories(lz, m);
  CHECK(!c.equivalent);
  CHECK(!c.op_equivalent);  // left-zero vs right-zero only anti-commute
  CHECK(compare_categories(lz, lz).equivalent);
}

TEST_CASE("roundtrip keeps the chirality of absorbed arrows") {
  // regression: the relation data must not confuse these two categories
  for (CatPtr x : {make_lz(), make_m()}) {
    CAPTURE(x->name);
    RoundtripResult r = roundtrip(x);
    CHECK(r.ok());
  }
  CompareResult cross = compare_categories(roundtrip(make_lz()).recovered, make_m());
  CHECK(!cross.equivalent);
  CHECK(!cross.op_equivalent);
}

TEST_CASE("comparison results on the benchmark pairs") {
  CompareResult a = compare_categories(fixture("Iso2"), fixture("One"));
  CHECK(a.equivalent);
  CompareResult b = compare_categories(fixture("Span"), fixture("Cospan"));
  CHECK(!b.equivalent);
  CHECK(b.op_equivalent);
  CompareResult c = compare_categories(fixture("Arrow"), fixture("One"));
  CHECK(!c.equivalent);
  CHECK(!c.op_equivalent);
}

TEST_CASE("every category is op-equivalent to its opposite") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CatPtr x = fixture(name);
    CHECK(compare_categories(x, opposite(x)).op_equivalent);
  }
}

TEST_CASE("assemble is consistent with recover on a nontrivial base") {
  CatPtr x = fixture("Z2");
  Fragment frag = Fragment::build(x);
  RecoveredData rec = recover(frag);
  AssembleResult ar = assemble(frag, rec);
  CompareResult c = compare_categories(x, ar.category);
  CHECK((c.equivalent || c.op_equivalent));
}
