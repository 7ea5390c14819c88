#pragma once

#include <array>
#include <map>
#include <optional>

#include "specat/fragment.hpp"

namespace specat {

// Everything that survives passing to an equivalent copy of Con_X: the
// minimal objects, their automorphism groups, the comma classes standing in
// for non-invertible morphisms, and the two composition relations. Relation
// keys carry explicit factor-orientation bits for classes at equal-endpoint
// pairs, so the chirality of endomorphism composition stays coupled to the
// rest of the table; the residual symmetry of the data is exactly the global
// flip to the opposite base.
struct RecoveredData {
  std::vector<int> minimal;  // fragment indices of the minimal objects, ascending
  std::vector<Fragment::FragAut> aut;                 // per minimal position
  std::map<std::pair<int, int>, int> num_classes;     // per pair of positions (i ≤ j)
  // (i, j, twisted factor ∈ {0,1}, aut element, class, class, s2) with
  // i ≤ j positions; s2 reads the target class against the factor-swapped
  // representative and is 0 unless i = j
  std::map<std::array<int, 7>, bool> rel_aut;
  // (a, b, c positions, class in {a,b}, class in {b,c}, class in {a,c},
  // s1, s2, s3); the s bits pick the source-role factor of each class at an
  // equal-endpoint pair and are 0 otherwise
  std::map<std::array<int, 9>, bool> rel_chain;
};

RecoveredData recover(const Fragment& frag);

struct AssembleResult {
  CatPtr category;  // one object per minimal position, named e0, e1, ...
  bool transposed;  // the solution used the opposite orientation globally
};

// Searches for a composition table consistent with the recovered relations
// and the category laws; throws InconsistentOrientation when none exists.
AssembleResult assemble(const Fragment& frag, const RecoveredData& rec);

struct CompareResult {
  bool equivalent = false;
  bool op_equivalent = false;
  std::optional<EquivalenceWitness> witness;
  std::optional<EquivalenceWitness> op_witness;
};

// Equivalence and op-equivalence of two connected finite categories.
CompareResult compare_categories(const CatPtr& A, const CatPtr& B);

struct RoundtripResult {
  CatPtr recovered;
  bool transposed = false;
  CompareResult cmp;
  int fragment_size = 0;
  int num_minimal = 0;
  bool ok() const { return cmp.equivalent || cmp.op_equivalent; }
};

// Full reconstruction: build the fragment of Con_X, recover the relational
// data, assemble a category from it, and compare against X.
RoundtripResult roundtrip(const CatPtr& X, unsigned seed = 0);

}  // namespace specat
