#include "specat/fixtures.hpp"

namespace specat {

namespace {

CatPtr make_one() {
  CategoryBuilder b("One");
  b.add_object("*");
  return b.build_or_throw();
}

CatPtr make_z2() {
  CategoryBuilder b("Z2");
  Obj star = b.add_object("*");
  Mor s = b.add_morphism("s", star, star);
  b.set_compose(s, s, b.identity_of(star));
  return b.build_or_throw();
}

CatPtr make_arrow() {
  CategoryBuilder b("Arrow");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  b.add_morphism("f", A, B);
  return b.build_or_throw();
}

CatPtr make_par2() {
  CategoryBuilder b("Par2");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  b.add_morphism("f", A, B);
  b.add_morphism("g", A, B);
  return b.build_or_throw();
}

CatPtr make_iso2() {
  CategoryBuilder b("Iso2");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  Mor f = b.add_morphism("f", A, B);
  Mor g = b.add_morphism("g", B, A);
  b.set_compose(g, f, b.identity_of(A));
  b.set_compose(f, g, b.identity_of(B));
  return b.build_or_throw();
}

CatPtr make_cospan() {
  CategoryBuilder b("Cospan");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  Obj C = b.add_object("C");
  b.add_morphism("f", A, B);
  b.add_morphism("g", C, B);
  return b.build_or_throw();
}

CatPtr make_span() {
  CategoryBuilder b("Span");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  Obj C = b.add_object("C");
  b.add_morphism("f", B, A);
  b.add_morphism("g", B, C);
  return b.build_or_throw();
}

CatPtr make_chain3() {
  CategoryBuilder b("Chain3");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  Obj C = b.add_object("C");
  Mor f = b.add_morphism("f", A, B);
  Mor g = b.add_morphism("g", B, C);
  Mor h = b.add_morphism("h", A, C);
  b.set_compose(g, f, h);
  return b.build_or_throw();
}

CatPtr make_chain3x() {
  CategoryBuilder b("Chain3X");
  Obj A = b.add_object("A");
  Obj B = b.add_object("B");
  Obj C = b.add_object("C");
  Mor f = b.add_morphism("f", A, B);
  Mor g = b.add_morphism("g", B, C);
  Mor h = b.add_morphism("h", A, C);
  b.add_morphism("h2", A, C);
  b.set_compose(g, f, h);
  return b.build_or_throw();
}

}  // namespace

CatPtr fixture(const std::string& name) {
  if (name == "One") return make_one();
  if (name == "Z2") return make_z2();
  if (name == "Arrow") return make_arrow();
  if (name == "Par2") return make_par2();
  if (name == "Iso2") return make_iso2();
  if (name == "Cospan") return make_cospan();
  if (name == "Span") return make_span();
  if (name == "Chain3") return make_chain3();
  if (name == "Chain3X") return make_chain3x();
  throw Error(Errc::UnknownObject, "no fixture named '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"One", "Z2", "Arrow", "Par2", "Iso2", "Cospan", "Span", "Chain3", "Chain3X"};
}

}  // namespace specat
