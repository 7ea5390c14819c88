#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specat/category.hpp"

namespace specat {

enum class CorpusMode { Exhaustive, Random };

// Generates connected, valid categories. Exhaustive mode enumerates every
// category (up to isomorphism) with at most max_objects objects and at most
// max_morphisms non-identity morphisms, by backtracking over composition
// tables; hard caps: 3 objects, 8 non-identity morphisms (BoundsTooLarge
// beyond). Random mode draws `count` samples, deterministic per seed. The
// nine named fixtures are always emitted first.
struct CorpusOptions {
  int max_objects = 3;
  int max_morphisms = 3;
  unsigned seed = 7;
  CorpusMode mode = CorpusMode::Exhaustive;
  int count = 25;  // random mode only
  bool include_fixtures = true;
};

std::vector<CatPtr> generate_corpus(const CorpusOptions& opts);

}  // namespace specat
