#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "specat/constructive.hpp"
#include "specat/fixtures.hpp"

using namespace specat;

TEST_CASE("identity_con certifies the identity functor") {
  CatPtr c = fixture("Chain3");
  ConFunctor id = identity_con(c);
  CHECK(is_valid_functor(id.F));
  for (Obj a = 0; a < c->num_objects(); ++a)
    for (Mor u = 0; u < c->num_morphisms(); ++u)
      if (is_isomorphism(*c, u) && c->dom(u) == a) CHECK(id.lift[a][u] == u);
}

TEST_CASE("non-faithful functors are rejected") {
  CatPtr par = fixture("Par2");
  CatPtr arrow = fixture("Arrow");
  FunctorData f;
  f.source = par;
  f.target = arrow;
  f.obj_map = {0, 1};
  Mor g = *arrow->morphism_by_name("f");
  f.mor_map = {arrow->identity(0), arrow->identity(1), g, g};  // collapses the pair
  REQUIRE(is_valid_functor(f));
  ValidationReport rep;
  CHECK(!is_constructive(f, &rep).has_value());
  CHECK(!rep.ok());
  CHECK_THROWS_AS(require_constructive(f), Error);
}

TEST_CASE("missing lifts are rejected") {
  // the inclusion of a point into Z2 has no lift of the nontrivial iso
  CatPtr one = fixture("One");
  CatPtr z2 = fixture("Z2");
  FunctorData f;
  f.source = one;
  f.target = z2;
  f.obj_map = {0};
  f.mor_map = {z2->identity(0)};
  REQUIRE(is_valid_functor(f));
  CHECK(!is_constructive(f).has_value());
}

TEST_CASE("point cover of a group is its universal cover") {
  CatPtr z2 = fixture("Z2");
  Cover cov = point_cover(z2, 0);
  CHECK(cov.objects.size() == 2);  // one object per element of Aut(*)
  const FiniteCategory& tot = *cov.con.total();
  // every hom-set of the cover is a singleton
  for (Obj a = 0; a < tot.num_objects(); ++a)
    for (Obj b = 0; b < tot.num_objects(); ++b)
      CHECK(tot.hom(a, b).size() == 1);
  for (auto [a, u] : cov.objects) {
    CHECK(is_isomorphism(*z2, u));
    CHECK(z2->dom(u) == cov.basepoint);
    CHECK(z2->cod(u) == a);
  }
}

TEST_CASE("aut_group matches a direct scan") {
  for (const auto& name : fixture_names()) {
    CatPtr c = fixture(name);
    for (Obj e = 0; e < c->num_objects(); ++e) {
      AutGroup ag = aut_group(*c, e);
      std::vector<Mor> want;
      for (Mor m = 0; m < c->num_morphisms(); ++m)
        if (c->dom(m) == e && c->cod(m) == e && is_isomorphism(*c, m)) want.push_back(m);
      CAPTURE(name);
      CHECK(ag.elements == want);
      for (size_t i = 0; i < want.size(); ++i)
        for (size_t j = 0; j < want.size(); ++j)
          CHECK(ag.elements[ag.table[i][j]] == c->compose(want[i], want[j]));
      for (size_t i = 0; i < want.size(); ++i)
        CHECK(c->compose(want[ag.inverse[i]], want[i]) == c->identity(e));
    }
  }
}

TEST_CASE("deck transformations act simply transitively") {
  CatPtr z2 = fixture("Z2");
  Cover cov = point_cover(z2, 0);
  AutGroup ag = aut_group(*z2, 0);
  std::set<std::vector<Obj>> images;
  for (Mor w : ag.elements) {
    FunctorData d = deck(cov, cov, w);
    CHECK(is_valid_functor(d));
    images.insert(d.obj_map);
  }
  CHECK(images.size() == ag.elements.size());
}

TEST_CASE("ev is the P014 bijection") {
  for (const auto& name : {"Z2", "Arrow", "Chain3", "Iso2"}) {
    CatPtr c = fixture(name);
    ConFunctor id = identity_con(c);
    for (Obj e = 0; e < c->num_objects(); ++e) {
      Cover cov = point_cover(c, e);
      EvBijection b = ev(cov, id);
      // fiber of the identity over e is {e} itself
      CAPTURE(name);
      REQUIRE(b.fiber == std::vector<Obj>{e});
      REQUIRE(b.morphisms.size() == 1);
      ObjMap back = ev_inverse(cov, id, e);
      CHECK(back == b.morphisms[0]);
    }
  }
}

TEST_CASE("ev counts the full fiber of a cover against itself") {
  CatPtr z2 = fixture("Z2");
  Cover cov = point_cover(z2, 0);
  EvBijection b = ev(cov, cov.con);
  CHECK(b.fiber.size() == 2);  // both cover objects sit over the basepoint
  CHECK(b.morphisms.size() == 2);
}

TEST_CASE("hom_over composes and expands consistently") {
  CatPtr z2 = fixture("Z2");
  Cover cov = point_cover(z2, 0);
  auto maps = hom_over(cov.con, cov.con);
  CHECK(maps.size() == 2);  // the deck transformations
  for (const ObjMap& phi : maps) {
    FunctorData f = expand_over(cov.con, cov.con, phi);
    CHECK(is_valid_functor(f));
    CHECK(commutes_over_base(f, cov.con.F, cov.con.F));
  }
}

TEST_CASE("coproducts of covers have componentwise homs") {
  CatPtr arrow = fixture("Arrow");
  MultiCover mc = cover_coproduct(arrow, {0, 1}, "AplusB");
  CHECK(mc.parts.size() == 2);
  CHECK(mc.con.total()->num_objects() == 2);
  CHECK(mc.links[0][1] == kNone);
  ConFunctor e = con_empty(arrow);
  CHECK(e.total()->num_objects() == 0);
  Coproduct cp = con_coproduct(mc.parts[0].con, mc.parts[1].con, "c");
  CHECK(cp.value.total()->num_objects() == 2);
  CHECK(is_valid_functor(cp.inj1));
  CHECK(is_valid_functor(cp.inj2));
}

TEST_CASE("bridges carry exactly one linking morphism per object pair") {
  CatPtr arrow = fixture("Arrow");
  Mor f = *arrow->morphism_by_name("f");
  BridgeData b = make_bridge(arrow, 0, 1, f, "bridge");
  const FiniteCategory& tot = *b.mc.con.total();
  CHECK(tot.num_objects() == 2);
  CHECK(b.mc.links[0][1] != kNone);
  CHECK(b.mc.links[1][0] == kNone);
  // one-way: hom from part 0 to part 1 singleton, reverse empty
  CHECK(tot.hom(0, 1).size() + tot.hom(1, 0).size() == 1);
}

TEST_CASE("self-bridges duplicate the cover for endomorphisms") {
  CategoryBuilder bld("idem");
  Obj A = bld.add_object("A");
  Mor m = bld.add_morphism("m", A, A);
  bld.set_compose(m, m, m);
  CatPtr c = bld.build_or_throw();
  BridgeData b = make_bridge(c, 0, 0, m, "self");
  CHECK(b.mc.parts.size() == 2);
  CHECK(b.mc.con.total()->num_objects() == 2);
}

TEST_CASE("invalid multicover shapes return nullopt") {
  CatPtr z2 = fixture("Z2");
  Mor sigma = -1;
  for (Mor m = 0; m < z2->num_morphisms(); ++m)
    if (!z2->is_identity(m)) sigma = m;
  REQUIRE(sigma >= 0);
  // linking by an isomorphism is not a valid bridge shape
  CHECK(!make_multicover(z2, {0, 0}, {{0, 1, sigma}}, "bad").has_value());
}

TEST_CASE("pushforward widens a groupoid cover to the ambient category") {
  CatPtr chain = fixture("Chain3X");
  auto gs = maximal_groupoids(chain);
  REQUIRE(!gs.empty());
  auto mat = gs[0].materialize("G");
  Cover local = universal_cover(mat, 0);
  ConFunctor widened = pushforward_groupoid(chain, mat, local.con);
  CHECK(is_valid_functor(widened.F));
  CHECK(widened.base() == chain);
}

TEST_CASE("pullback along a functor has the fiber-product objects") {
  CatPtr arrow = fixture("Arrow");
  ConFunctor id = identity_con(arrow);
  ConFunctor pb = pullback_along(identity_functor(arrow), id);
  CHECK(pb.total()->num_objects() == arrow->num_objects());
  CHECK(is_valid_functor(pb.F));
}
