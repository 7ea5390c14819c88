#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "specat/catover.hpp"
#include "specat/document.hpp"
#include "specat/report.hpp"

using namespace specat;

namespace {

struct Output {
  std::string format = "text";  // text | json
  bool timings = false;

  void emit(const Json& report, const std::string& text) const {
    if (format == "json")
      std::cout << render_json(report);
    else
      std::cout << text;
  }
};

CatPtr load_category(const std::string& path) {
  CategoryDocument doc = parse_document(read_text_file(path));
  return document_category_or_throw(doc);
}

std::string category_text(const CatPtr& cat) { return serialize_document(document_of(cat)); }

int cmd_validate(const std::string& path, const Output& out) {
  CategoryDocument doc = parse_document(read_text_file(path));
  ValidationReport rep;
  CatPtr cat = document_category(doc, rep);
  Json issues = Json::array();
  for (const auto& i : rep.issues) issues.push_back(std::string(errc_name(i.code)) + ": " + i.detail);
  bool valid = cat && rep.ok();
  std::string text = valid ? "valid\n" : "invalid\n" + rep.to_string();
  out.emit(report_envelope("validate", {path}, valid ? "valid" : "invalid",
                           Json{{"issues", issues}}),
           text);
  return valid ? 0 : 1;
}

int cmd_op(const std::string& path, const std::string& g, const std::string& f,
           const Output& out) {
  CatPtr cat = load_category(path);
  auto gm = cat->morphism_by_name(g), fm = cat->morphism_by_name(f);
  if (!gm) throw Error(Errc::UnknownMorphism, g);
  if (!fm) throw Error(Errc::UnknownMorphism, f);
  if (!cat->composable(*gm, *fm))
    throw Error(Errc::DomainMismatch, g + " ∘ " + f + " is not composable");
  std::string h = cat->morphism_names[cat->compose(*gm, *fm)];
  out.emit(report_envelope("op", {path, g, f}, h, Json::object()), h + "\n");
  return 0;
}

int cmd_skeleton(const std::string& path, const Output& out) {
  CatPtr cat = load_category(path);
  auto mat = skeleton(cat).materialize(cat->name + "_skeleton");
  out.emit(report_envelope("skeleton", {path}, "ok",
                           Json{{"objects", mat.cat->num_objects()},
                                {"morphisms", mat.cat->num_morphisms()},
                                {"category", serialize_document(document_of(mat.cat))}}),
           category_text(mat.cat));
  return 0;
}

int cmd_components(const std::string& path, const Output& out) {
  CatPtr cat = load_category(path);
  auto comps = connected_components(*cat);
  Json j = Json::array();
  std::string text;
  for (const auto& comp : comps) {
    Json names = Json::array();
    for (Obj a : comp) {
      names.push_back(cat->object_names[a]);
      text += (text.empty() || text.back() == '\n' ? "" : " ") + cat->object_names[a];
    }
    text += "\n";
    j.push_back(std::move(names));
  }
  out.emit(report_envelope("components", {path}, std::to_string(comps.size()),
                           Json{{"components", j}}),
           text);
  return 0;
}

int cmd_groupoids(const std::string& path, const Output& out) {
  CatPtr cat = load_category(path);
  auto gs = maximal_groupoids(cat);
  Json j = Json::array();
  std::string text;
  for (const auto& g : gs) {
    Json objs = Json::array(), mors = Json::array();
    text += "groupoid:";
    for (Obj a : g.objects) {
      objs.push_back(cat->object_names[a]);
      text += " " + cat->object_names[a];
    }
    for (Mor m : g.morphisms) mors.push_back(cat->morphism_names[m]);
    text += "\n";
    j.push_back(Json{{"objects", objs}, {"morphisms", mors}});
  }
  out.emit(report_envelope("groupoids", {path}, std::to_string(gs.size()),
                           Json{{"groupoids", j}}),
           text);
  return 0;
}

int cmd_cover(const std::string& path, const std::string& object, const Output& out) {
  CatPtr cat = load_category(path);
  auto e = cat->object_by_name(object);
  if (!e) throw Error(Errc::UnknownObject, object);
  Cover cov = point_cover(cat, *e);
  Json objs = Json::array();
  std::string text;
  for (const auto& [a, u] : cov.objects) {
    objs.push_back(Json{{"object", cat->object_names[a]}, {"iso", cat->morphism_names[u]}});
    text += "(" + cat->object_names[a] + ", " + cat->morphism_names[u] + ")\n";
  }
  out.emit(report_envelope("cover", {path, object}, std::to_string(cov.objects.size()),
                           Json{{"objects", objs}}),
           text);
  return 0;
}

int cmd_species_top(const std::string& path, const Output& out) {
  CategoryDocument doc = parse_document(read_text_file(path));
  CatPtr cat = document_category_or_throw(doc);
  SetMapCategory z = setmap_from_document(doc, cat);
  StructureSpecies sigma = topology_species(z);
  Realization real = realize(sigma);
  Json fibers = Json::object();
  std::string text;
  for (Obj a = 0; a < cat->num_objects(); ++a) {
    int n = 0;
    for (const auto& [oa, t] : real.objects) n += oa == a;
    fibers[cat->object_names[a]] = n;
    text += cat->object_names[a] + ": " + std::to_string(n) + " topologies\n";
  }
  bool constructive = is_constructive(real.con.F).has_value();
  out.emit(report_envelope("species-top", {path}, constructive ? "constructive" : "invalid",
                           Json{{"fibers", fibers},
                                {"total_objects", (int)real.objects.size()}}),
           text);
  return constructive ? 0 : 1;
}

int cmd_reconstruct(const std::string& path, bool strict, unsigned seed, const Output& out) {
  CatPtr cat = load_category(path);
  if (strict) {
    RoundtripStrictResult rt = roundtrip_strict(cat);
    Json w{{"isomorphic", rt.cmp.isomorphic},
           {"op_isomorphic", rt.cmp.op_isomorphic},
           {"fragment_size", rt.fragment_size},
           {"recovered", serialize_document(document_of(rt.recovered))}};
    out.emit(report_envelope("reconstruct", {path}, rt.ok() ? "recovered" : "failed",
                             std::move(w), std::nullopt, seed),
             category_text(rt.recovered) + (rt.ok() ? "# recovered up to iso-or-op\n"
                                                    : "# MISMATCH\n"));
    return rt.ok() ? 0 : 1;
  }
  RoundtripResult rt = roundtrip(cat, seed);
  Json w{{"equivalent", rt.cmp.equivalent},
         {"op_equivalent", rt.cmp.op_equivalent},
         {"transposed", rt.transposed},
         {"fragment_size", rt.fragment_size},
         {"recovered", serialize_document(document_of(rt.recovered))}};
  out.emit(report_envelope("reconstruct", {path}, rt.ok() ? "recovered" : "failed", std::move(w),
                           std::nullopt, seed),
           category_text(rt.recovered) +
               (rt.ok() ? "# recovered up to equivalence-or-op\n" : "# MISMATCH\n"));
  return rt.ok() ? 0 : 1;
}

int cmd_compare(const std::string& pa, const std::string& pb, bool strict, const Output& out) {
  CatPtr A = load_category(pa), B = load_category(pb);
  if (strict) {
    CompareStrictResult c = compare_strict(A, B);
    Json w{{"isomorphic", c.isomorphic}, {"op_isomorphic", c.op_isomorphic}};
    if (c.witness) w["witness"] = functor_json(*c.witness);
    if (c.op_witness) w["op_witness"] = functor_json(*c.op_witness);
    out.emit(report_envelope("compare", {pa, pb},
                             c.isomorphic ? "isomorphic" : "not isomorphic", std::move(w)),
             std::string("isomorphic: ") + (c.isomorphic ? "yes" : "no") +
                 "\nop_isomorphic: " + (c.op_isomorphic ? "yes" : "no") + "\n");
    return c.isomorphic ? 0 : 1;
  }
  CompareResult c = compare_categories(A, B);
  Json w{{"equivalent", c.equivalent}, {"op_equivalent", c.op_equivalent}};
  out.emit(report_envelope("compare", {pa, pb},
                           c.equivalent ? "equivalent" : "not equivalent", std::move(w)),
           std::string("equivalent: ") + (c.equivalent ? "yes" : "no") +
               "\nop_equivalent: " + (c.op_equivalent ? "yes" : "no") + "\n");
  return c.equivalent ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opts, const Output& out) {
  VerifyRun run = run_verify(opts);
  out.emit(report_envelope("verify", {}, run.ok() ? "pass" : "fail", verify_json(run),
                           std::nullopt, opts.seed),
           verify_text(run));
  return run.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category computations: validation, covers, species, reconstruction"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path, path_b, arg_g, arg_f, object;
  bool strict = false;
  unsigned seed = 0;

  auto* validate = app.add_subcommand("validate", "check a category file against the laws");
  validate->add_option("file", path)->required();

  auto* op = app.add_subcommand("op", "compose two morphisms (g then f, printing g∘f)");
  op->add_option("file", path)->required();
  op->add_option("g", arg_g)->required();
  op->add_option("f", arg_f)->required();

  auto* skel = app.add_subcommand("skeleton", "print the skeleton");
  skel->add_option("file", path)->required();

  auto* comp = app.add_subcommand("components", "list connected components");
  comp->add_option("file", path)->required();

  auto* grp = app.add_subcommand("groupoids", "list maximal connected groupoids");
  grp->add_option("file", path)->required();

  auto* cover = app.add_subcommand("cover", "dump the universal cover at an object");
  cover->add_option("file", path)->required();
  cover->add_option("--object", object, "basepoint object")->required();

  auto* stop = app.add_subcommand("species-top", "realize the topology species of a set-map category");
  stop->add_option("file", path)->required();

  auto* rec = app.add_subcommand("reconstruct", "recover the category from its functor category");
  rec->add_option("file", path)->required();
  rec->add_flag("--strict", strict, "strict (isomorphism-level) reconstruction");
  rec->add_option("--seed", seed, "fragment shuffle seed");

  auto* cmp = app.add_subcommand("compare", "equivalence / opposite-equivalence of two categories");
  cmp->add_option("a", path)->required();
  cmp->add_option("b", path_b)->required();
  cmp->add_flag("--strict", strict, "isomorphism-level comparison");

  VerifyOptions vo;
  std::string mode = "exhaustive";
  auto* ver = app.add_subcommand("verify", "run the proposition battery over a generated corpus");
  ver->add_option("--max-objects", vo.max_objects)->capture_default_str();
  ver->add_option("--max-morphisms", vo.max_morphisms)->capture_default_str();
  ver->add_option("--seed", vo.seed)->capture_default_str();
  ver->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  ver->add_option("--count", vo.random_count, "sample count in random mode")->capture_default_str();
  ver->add_option("--only", vo.only, "run only the named checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(path, out);
    if (*op) return cmd_op(path, arg_g, arg_f, out);
    if (*skel) return cmd_skeleton(path, out);
    if (*comp) return cmd_components(path, out);
    if (*grp) return cmd_groupoids(path, out);
    if (*cover) return cmd_cover(path, object, out);
    if (*stop) return cmd_species_top(path, out);
    if (*rec) return cmd_reconstruct(path, strict, seed, out);
    if (*cmp) return cmd_compare(path, path_b, strict, out);
    if (*ver) {
      vo.mode = mode == "random" ? CorpusMode::Random : CorpusMode::Exhaustive;
      return cmd_verify(vo, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
