#pragma once

#include <string>
#include <vector>

#include "specat/category.hpp"

namespace specat {

// The named benchmark categories: One, Z2, Arrow, Par2, Iso2, Cospan, Span,
// Chain3 (A→B→C with composite), Chain3X (Chain3 plus a second A→C).
CatPtr fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace specat
