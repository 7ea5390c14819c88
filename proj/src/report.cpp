#include "specat/report.hpp"

#include <sstream>

namespace specat {

Json report_envelope(const std::string& command, const std::vector<std::string>& inputs,
                     const std::string& verdict, Json witnesses,
                     std::optional<Json> timings_ms, std::optional<unsigned> seed) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = verdict;
  j["witnesses"] = std::move(witnesses);
  j["timings_ms"] = timings_ms ? *timings_ms : Json(nullptr);
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

Json functor_json(const FunctorData& f) {
  Json j;
  Json objs = Json::object();
  for (Obj a = 0; a < f.source->num_objects(); ++a)
    objs[f.source->object_names[a]] = f.target->object_names[f.obj_map[a]];
  Json mors = Json::object();
  for (Mor m = 0; m < f.source->num_morphisms(); ++m)
    mors[f.source->morphism_names[m]] = f.target->morphism_names[f.mor_map[m]];
  j["objects"] = std::move(objs);
  j["morphisms"] = std::move(mors);
  return j;
}

Json verify_json(const VerifyRun& run) {
  Json checks = Json::array();
  for (const auto& c : run.checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["fail"] = c.fail;
    j["skipped"] = c.skipped;
    j["counterexamples"] = c.counterexamples;
    checks.push_back(std::move(j));
  }
  Json witnesses;
  witnesses["corpus_size"] = run.corpus_size;
  witnesses["max_objects"] = run.opts.max_objects;
  witnesses["max_morphisms"] = run.opts.max_morphisms;
  witnesses["mode"] = run.opts.mode == CorpusMode::Exhaustive ? "exhaustive" : "random";
  witnesses["checks"] = std::move(checks);
  return witnesses;
}

std::string verify_text(const VerifyRun& run) {
  std::ostringstream out;
  out << "corpus: " << run.corpus_size << " categories (max_objects=" << run.opts.max_objects
      << ", max_morphisms=" << run.opts.max_morphisms << ", seed=" << run.opts.seed << ")\n";
  for (const auto& c : run.checks) {
    out << (c.ok() ? "PASS" : "FAIL") << "  " << c.name << "  pass=" << c.pass
        << " fail=" << c.fail << " skipped=" << c.skipped << "\n";
    for (const auto& cx : c.counterexamples) out << "  counterexample:\n" << cx;
  }
  out << (run.ok() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

}  // namespace specat
