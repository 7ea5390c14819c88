#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"
#include "specat/document.hpp"

using namespace specat;

namespace {

#ifndef SPECAT_BIN
#error "SPECAT_BIN must point at the CLI binary"
#endif

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPECAT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/specat_cli_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

const char* kArrow =
    "category arrow\n"
    "object A\n"
    "object B\n"
    "morphism f : A -> B\n";

const char* kChain =
    "category chain\n"
    "object A\n"
    "object B\n"
    "object C\n"
    "morphism f : A -> B\n"
    "morphism g : B -> C\n"
    "morphism h : A -> C\n"
    "compose g f = h\n";

}  // namespace

TEST_CASE("document parse/serialize round-trip") {
  CategoryDocument doc = parse_document(kChain);
  CHECK(doc.objects.size() == 3);
  CHECK(doc.morphisms.size() == 3);
  CategoryDocument norm = normalize_document(doc);
  std::string text = serialize_document(norm);
  CHECK(parse_document(text) == norm);
  CHECK(serialize_document(parse_document(text)) == text);
}

TEST_CASE("document semantic errors") {
  CHECK_THROWS_AS(parse_document("category c\nobject A\nobject A\n"), Error);
  CHECK_THROWS_AS(parse_document("category c\nmorphism f : A -> B\n"), Error);
  CHECK_THROWS_AS(parse_document("category c\nobject A\nnonsense line\n"), Error);
}

TEST_CASE("document_of inverts document_category") {
  CategoryDocument doc = parse_document(kChain);
  CatPtr cat = document_category_or_throw(doc);
  CategoryDocument back = document_of(cat);
  CHECK(back.objects == doc.objects);
  CHECK(back.morphisms == doc.morphisms);
  CHECK(document_category_or_throw(back)->same_tables(*cat));
}

TEST_CASE("validate exits 0/1/2") {
  std::string good = write_temp("good.cat", kChain);
  CHECK(run_cli("validate " + good).exit_code == 0);
  // missing composite → invalid, exit 1
  std::string bad = write_temp(
      "bad.cat",
      "category c\nobject A\nobject B\nobject C\n"
      "morphism f : A -> B\nmorphism g : B -> C\n");
  RunResult r = run_cli("validate " + bad);
  CHECK(r.exit_code == 1);
  // syntax error → exit 2
  std::string ugly = write_temp("ugly.cat", "category c\nobject\n");
  CHECK(run_cli("validate " + ugly).exit_code == 2);
  CHECK(run_cli("validate /nonexistent.cat").exit_code == 2);
}

TEST_CASE("op composes by name") {
  std::string path = write_temp("chain.cat", kChain);
  RunResult r = run_cli("op " + path + " g f");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "h\n");
  CHECK(run_cli("op " + path + " f g").exit_code == 2);  // not composable
  CHECK(run_cli("op " + path + " f nope").exit_code == 2);
}

TEST_CASE("json reports carry the envelope") {
  std::string path = write_temp("arrow.cat", kArrow);
  RunResult r = run_cli("validate " + path + " --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "validate");
  CHECK(j["verdict"] == "valid");
  CHECK(j.contains("inputs"));
  CHECK(j.contains("witnesses"));
  CHECK(j["timings_ms"].is_null());
  CHECK(j.contains("seed"));
}

TEST_CASE("skeleton, components, groupoids, cover") {
  std::string iso2 = write_temp(
      "iso2.cat",
      "category iso2\nobject A\nobject B\n"
      "morphism u : A -> B\nmorphism v : B -> A\n"
      "compose v u = id_A\ncompose u v = id_B\n");
  RunResult sk = run_cli("skeleton " + iso2 + " --format json");
  CHECK(sk.exit_code == 0);
  CHECK(nlohmann::json::parse(sk.out)["witnesses"]["objects"].size() == 1);
  RunResult co = run_cli("components " + iso2 + " --format json");
  CHECK(nlohmann::json::parse(co.out)["verdict"] == "1");
  RunResult gr = run_cli("groupoids " + iso2 + " --format json");
  CHECK(nlohmann::json::parse(gr.out)["verdict"] == "1");
  RunResult cv = run_cli("cover " + iso2 + " --object A --format json");
  CHECK(cv.exit_code == 0);
  CHECK(nlohmann::json::parse(cv.out)["verdict"] == "2");  // two objects over A
  CHECK(run_cli("cover " + iso2 + " --object Z").exit_code == 2);
}

TEST_CASE("species-top realizes the two-point carrier") {
  std::string z = write_temp("zbase.cat",
                             "category zbase\nobject T\nspecies top\norder T : p q\n");
  RunResult r = run_cli("species-top " + z + " --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "constructive");
  CHECK(j["witnesses"]["fibers"]["T"] == 4);
  CHECK(j["witnesses"]["total_objects"] == 4);
}

TEST_CASE("reconstruct and compare") {
  std::string chain = write_temp("chain.cat", kChain);
  CHECK(run_cli("reconstruct " + chain).exit_code == 0);
  CHECK(run_cli("reconstruct " + chain + " --strict").exit_code == 0);
  std::string arrow = write_temp("arrow.cat", kArrow);
  RunResult eq = run_cli("compare " + chain + " " + chain + " --format json");
  CHECK(eq.exit_code == 0);
  CHECK(nlohmann::json::parse(eq.out)["witnesses"]["equivalent"] == true);
  RunResult ne = run_cli("compare " + chain + " " + arrow + " --format json");
  CHECK(ne.exit_code == 1);
  auto j = nlohmann::json::parse(ne.out);
  CHECK(j["witnesses"]["equivalent"] == false);
  CHECK(j["witnesses"]["op_equivalent"] == false);
  CHECK(run_cli("compare " + chain + " " + arrow + " --strict").exit_code == 1);
}

TEST_CASE("verify subset runs and reports deterministically") {
  std::string args = "verify --max-objects 2 --max-morphisms 1 --only validators "
                     "--only l01-minimal-classification --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-identical reports for the same seed
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["seed"] == 7);
}

TEST_CASE("unknown flags and missing subcommands exit nonzero") {
  CHECK(run_cli("").exit_code != 0);
  CHECK(run_cli("frobnicate x").exit_code != 0);
}
