// End-to-end acceptance battery: one verdict line per criterion, exit
// nonzero when anything fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "specat/catover.hpp"
#include "specat/fixtures.hpp"
#include "specat/reconstruct.hpp"
#include "specat/report.hpp"
#include "specat/species.hpp"
#include "specat/verify.hpp"

using namespace specat;

namespace {

int failures = 0;

void verdict(bool ok, const std::string& name, const std::string& detail = "") {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

bool battery_ok(const std::vector<std::string>& only, long long* total = nullptr) {
  VerifyOptions o;
  o.only = only;
  VerifyRun run = run_verify(o);
  long long sum = 0;
  for (const auto& c : run.checks) sum += c.pass;
  if (total) *total = sum;
  return run.ok() && run.corpus_size > 0;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;

  // 1. equivalence-level roundtrip over the exhaustive corpus, time-boxed
  {
    auto t0 = Clock::now();
    long long n = 0;
    bool ok = battery_ok({"theorem1-roundtrip"}, &n);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    verdict(ok && secs < 300.0, "roundtrip-equivalence-exhaustive",
            std::to_string(n) + " categories in " + std::to_string((int)secs) + "s");
  }

  // 2. every category compares as op-equivalent to its opposite
  {
    bool ok = true;
    for (const auto& name : fixture_names()) {
      CatPtr x = fixture(name);
      CompareResult c = compare_categories(x, opposite(x));
      ok = ok && c.op_equivalent;
    }
    verdict(ok, "opposite-comparison-fixtures");
  }

  // 3. cover-evaluation bijection with exact fiber counts
  verdict(battery_ok({"p014-universal-cover", "pp01-adjunction"}),
          "cover-evaluation-counts");

  // 4. minimal-object classification against the independent oracle
  verdict(battery_ok({"l01-minimal-classification"}), "minimal-object-classification");

  // 5. composition relations (aut-twists, chains, invertible exclusion)
  verdict(battery_ok({"l34-aut-composition", "l07-chain-composition",
                      "e67-invertible-exclusion"}),
          "composition-relations-exhaustive");

  // 6. automorphism groups transported through the fragment
  verdict(battery_ok({"l090-aut-groups"}), "automorphism-group-isomorphisms");

  // 7. topology species on a 2-element carrier: 4 structures, constructive realization
  {
    SetMapCategory z;
    z.cat = fixture("One");
    z.sizes = {2};
    z.op_map = {{0, 1}};
    StructureSpecies sigma = topology_species(z);
    Realization r = realize(sigma);
    bool ok = sigma.S.size() == 1 && sigma.S[0].size() == 4 && r.objects.size() == 4 &&
              is_constructive(r.con.F).has_value();
    verdict(ok, "topology-species-realization");
  }

  // 8. strict roundtrip plus discrimination from the equivalence level
  {
    bool ok = battery_ok({"t05-strict-roundtrip"});
    CompareResult eq = compare_categories(fixture("Iso2"), fixture("One"));
    CompareStrictResult st = compare_strict(fixture("Iso2"), fixture("One"));
    ok = ok && eq.equivalent && !st.isomorphic && !st.op_isomorphic;
    verdict(ok, "strict-roundtrip-discrimination");
  }

  // 9. verify reports are byte-identical for a fixed seed
  {
    VerifyOptions o;
    o.max_objects = 2;
    o.max_morphisms = 2;
    std::string a = render_json(verify_json(run_verify(o)));
    std::string b = render_json(verify_json(run_verify(o)));
    verdict(!a.empty() && a == b, "report-determinism");
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria met"
                                    : "acceptance: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
