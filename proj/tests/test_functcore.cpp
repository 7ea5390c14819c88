#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "specat/fixtures.hpp"
#include "specat/functor.hpp"

using namespace specat;

TEST_CASE("identity functor validates and composes neutrally") {
  CatPtr c = fixture("Chain3");
  FunctorData id = identity_functor(c);
  CHECK(is_valid_functor(id));
  CHECK(compose_functors(id, id) == id);
  CHECK(is_faithful(id));
  CHECK(is_full(id));
  CHECK(is_injective_on_objects(id));
}

TEST_CASE("functor laws are actually checked") {
  CatPtr arrow = fixture("Arrow");
  FunctorData f;
  f.source = arrow;
  f.target = arrow;
  f.obj_map = {0, 1};
  f.mor_map = {0, 1, 2};
  // break identity preservation
  FunctorData bad = f;
  bad.mor_map[0] = *arrow->morphism_by_name("f");
  CHECK(is_valid_functor(identity_functor(arrow)));
  CHECK(!is_valid_functor(bad));
}

TEST_CASE("functor enumeration counts match hand counts") {
  CatPtr one = fixture("One");
  CatPtr arrow = fixture("Arrow");
  // One → Arrow: pick an object, identity goes to its identity
  CHECK(all_functors(one, arrow).size() == 2);
  // Arrow → Arrow: determined by the image of the generating arrow, which can
  // be any morphism: id_A, id_B or f
  CHECK(all_functors(arrow, arrow).size() == 3);
  // Arrow → One: everything collapses
  CHECK(all_functors(arrow, one).size() == 1);
  // enumeration is deterministic
  auto a = all_functors(arrow, arrow);
  auto b = all_functors(arrow, arrow);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("enumeration can stop early") {
  CatPtr arrow = fixture("Arrow");
  int seen = 0;
  enumerate_functors(arrow, arrow, [&](const FunctorData&) {
    ++seen;
    return seen < 2;
  });
  CHECK(seen == 2);
}

TEST_CASE("natural transformation validation") {
  CatPtr one = fixture("One");
  CatPtr arrow = fixture("Arrow");
  auto fs = all_functors(one, arrow);  // the two points of Arrow
  REQUIRE(fs.size() == 2);
  const FunctorData& at_a = fs[0].obj_map[0] == 0 ? fs[0] : fs[1];
  const FunctorData& at_b = fs[0].obj_map[0] == 0 ? fs[1] : fs[0];
  NaturalTransformationData t;
  t.source = at_a;
  t.target = at_b;
  t.components = {*arrow->morphism_by_name("f")};
  CHECK(validate_natural_transformation(t).ok());
  // wrong endpoint
  NaturalTransformationData bad = t;
  bad.components = {arrow->identity(0)};
  CHECK(!validate_natural_transformation(bad).ok());
}

TEST_CASE("op_functor interprets the same maps over the opposites") {
  CatPtr arrow = fixture("Arrow");
  CatPtr arrow_op = opposite(arrow);
  FunctorData id = identity_functor(arrow);
  FunctorData op = op_functor(id, arrow_op, arrow_op);
  CHECK(is_valid_functor(op));
  CHECK(op.source == arrow_op);
}

TEST_CASE("find_isomorphism agrees with table equality up to renaming") {
  CatPtr span = fixture("Span");
  CatPtr cospan = fixture("Cospan");
  CHECK(!find_isomorphism(span, cospan).has_value());
  auto w = find_isomorphism(span, opposite(cospan));
  REQUIRE(w.has_value());
  CHECK(is_valid_functor(*w));
  // every fixture is isomorphic to itself
  for (const auto& name : fixture_names()) {
    CatPtr c = fixture(name);
    CAPTURE(name);
    CHECK(find_isomorphism(c, c).has_value());
  }
}

TEST_CASE("equivalence sees through skeletons, isomorphism does not") {
  CatPtr iso2 = fixture("Iso2");
  CatPtr one = fixture("One");
  CHECK(are_equivalent(iso2, one).equivalent);
  CHECK(!find_isomorphism(iso2, one).has_value());
  CHECK(!are_equivalent(fixture("Arrow"), one).equivalent);
}

TEST_CASE("search budget exhaustion throws instead of lying") {
  CatPtr c = fixture("Chain3X");
  SearchBudget tiny(3);
  CHECK_THROWS_AS(find_isomorphism(c, c, &tiny), Error);
  // and a fresh default budget succeeds
  CHECK(find_isomorphism(c, c).has_value());
}
