#pragma once

#include <string>
#include <vector>

#include "specat/corpus.hpp"

namespace specat {

// The proposition battery: each check quantifies exhaustively over a
// generated corpus and compares library verdicts against independent oracles
// computed directly from the base categories' tables.
struct VerifyOptions {
  int max_objects = 3;
  int max_morphisms = 3;
  unsigned seed = 7;
  CorpusMode mode = CorpusMode::Exhaustive;
  int random_count = 25;
  std::vector<std::string> only;  // run only these checks; empty = all
};

struct CheckResult {
  std::string name;
  long long pass = 0, fail = 0, skipped = 0;
  // re-runnable reproductions: serialized category + operation inputs
  std::vector<std::string> counterexamples;
  bool ok() const { return fail == 0; }
};

struct VerifyRun {
  VerifyOptions opts;
  int corpus_size = 0;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

std::vector<std::string> verify_check_names();
VerifyRun run_verify(const VerifyOptions& opts);

}  // namespace specat
