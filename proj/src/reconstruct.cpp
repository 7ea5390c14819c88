#include "specat/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace specat {

RecoveredData recover(const Fragment& frag) {
  RecoveredData rec;
  rec.minimal = frag.minimal_objects();
  int k = (int)rec.minimal.size();
  for (int i = 0; i < k; ++i) rec.aut.push_back(frag.aut(rec.minimal[i]));

  auto classes = [&](int i, int j) -> const std::vector<Fragment::CommaObject>& {
    return frag.dagger_classes(rec.minimal[std::min(i, j)], rec.minimal[std::max(i, j)]);
  };

  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      const auto& cls = classes(i, j);
      rec.num_classes[{i, j}] = (int)cls.size();
      int ns2 = (i == j) ? 2 : 1;
      for (int f = 0; f < 2; ++f) {
        int side_pos = (f == 0) ? i : j;
        int nw = (int)rec.aut[side_pos].elements.size();
        for (int w = 0; w < nw; ++w)
          for (int d1 = 0; d1 < (int)cls.size(); ++d1)
            for (int d2 = 0; d2 < (int)cls.size(); ++d2)
              for (int s2 = 0; s2 < ns2; ++s2)
                rec.rel_aut[{i, j, f, w, d1, d2, s2}] = frag.compose_with_aut(
                    rec.minimal[i], rec.minimal[j], f, w, cls[d1], cls[d2], s2);
      }
    }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const auto& c1 = classes(a, b);
        const auto& c2 = classes(b, c);
        const auto& c3 = classes(a, c);
        int n1 = (a == b) ? 2 : 1, n2 = (b == c) ? 2 : 1, n3 = (a == c) ? 2 : 1;
        for (int d = 0; d < (int)c1.size(); ++d)
          for (int dp = 0; dp < (int)c2.size(); ++dp)
            for (int dpp = 0; dpp < (int)c3.size(); ++dpp)
              for (int s1 = 0; s1 < n1; ++s1)
                for (int s2 = 0; s2 < n2; ++s2)
                  for (int s3 = 0; s3 < n3; ++s3)
                    rec.rel_chain[{a, b, c, d, dp, dpp, s1, s2, s3}] =
                        frag.compose_bridges(rec.minimal[a], rec.minimal[b], rec.minimal[c],
                                             c1[d], s1, c2[dp], s2, c3[dpp], s3);
      }
  return rec;
}

namespace {

// One abstract morphism of the candidate category.
struct CandMor {
  enum Kind { Aut, Dagger } kind;
  int i = -1, j = -1;  // minimal positions; pair (i ≤ j) for daggers
  int idx = -1;        // aut element index / class index
  Obj dom = -1, cod = -1;
  int flip = 0;  // equal-endpoint daggers: 1 if realized opposite to the class rep
};

struct Candidate {
  const RecoveredData& rec;
  int k;
  bool transposed;
  std::vector<CandMor> mors;
  std::vector<std::vector<int>> aut_mor;            // [pos][elem] → morphism id
  std::map<std::pair<int, int>, std::vector<int>> cls_mor;  // [pair] → morphism ids
  std::vector<std::vector<int>> comp;               // comp[g][f], -1 unknown, -2 not composable

  explicit Candidate(const RecoveredData& r) : rec(r), k((int)r.minimal.size()) {}

  int M() const { return (int)mors.size(); }
  bool composable(int g, int f) const { return mors[g].dom == mors[f].cod; }

  int aut_comp(int pos, int w1, int w2) const {
    return transposed ? rec.aut[pos].table[w2][w1] : rec.aut[pos].table[w1][w2];
  }
};

// Builds the morphism inventory for one orientation assignment. orient maps
// each distinct-endpoint class to 0 (i→j) or 1 (j→i), and each equal-endpoint
// class to its flip bit against the stored class representative.
Candidate make_candidate(const RecoveredData& rec, bool transposed,
                         const std::map<std::pair<int, int>, std::vector<int>>& orient) {
  Candidate cand(rec);
  cand.transposed = transposed;
  cand.aut_mor.resize(cand.k);
  for (int i = 0; i < cand.k; ++i) {
    int nw = (int)rec.aut[i].elements.size();
    cand.aut_mor[i].resize(nw);
    for (int w = 0; w < nw; ++w) {
      cand.aut_mor[i][w] = cand.M();
      cand.mors.push_back({CandMor::Aut, i, i, w, i, i});
    }
  }
  for (int i = 0; i < cand.k; ++i)
    for (int j = i; j < cand.k; ++j) {
      auto key = std::make_pair(i, j);
      int nc = rec.num_classes.at(key);
      auto& v = cand.cls_mor[key];
      for (int c = 0; c < nc; ++c) {
        int bit = orient.at(key)[c];
        v.push_back(cand.M());
        if (i == j)
          cand.mors.push_back({CandMor::Dagger, i, j, c, i, i, bit});
        else
          cand.mors.push_back(
              {CandMor::Dagger, i, j, c, bit == 0 ? i : j, bit == 0 ? j : i, 0});
      }
    }
  cand.comp.assign(cand.M(), std::vector<int>(cand.M(), -2));
  for (int g = 0; g < cand.M(); ++g)
    for (int f = 0; f < cand.M(); ++f)
      if (cand.composable(g, f)) cand.comp[g][f] = -1;
  return cand;
}

// Candidate composites of g∘f allowed by the recovered relations.
std::vector<int> allowed(const Candidate& cand, int g, int f) {
  const RecoveredData& rec = cand.rec;
  const CandMor& mf = cand.mors[f];
  const CandMor& mg = cand.mors[g];
  std::vector<int> out;
  if (mf.kind == CandMor::Aut && mg.kind == CandMor::Aut) {
    out.push_back(cand.aut_mor[mf.i][cand.aut_comp(mf.i, mg.idx, mf.idx)]);
    return out;
  }
  if (mf.kind == CandMor::Dagger && mg.kind == CandMor::Aut) {
    // g∘f post-composes f with an automorphism at cod(f)
    if (rec.aut[mg.i].identity == mg.idx) return {f};
    bool self = (mf.i == mf.j);
    int factor = self ? 1 - mf.flip : (mg.i == mf.i ? 0 : 1);
    for (int d2 = 0; d2 < (int)cand.cls_mor.at({mf.i, mf.j}).size(); ++d2) {
      int m2 = cand.cls_mor.at({mf.i, mf.j})[d2];
      if (!self && (cand.mors[m2].dom != mf.dom || cand.mors[m2].cod != mf.cod)) continue;
      int s2 = self ? (mf.flip ^ cand.mors[m2].flip) : 0;
      if (rec.rel_aut.at({mf.i, mf.j, factor, mg.idx, mf.idx, d2, s2})) out.push_back(m2);
    }
    return out;
  }
  if (mf.kind == CandMor::Aut && mg.kind == CandMor::Dagger) {
    // g∘f pre-composes g with an automorphism at dom(g)
    if (rec.aut[mf.i].identity == mf.idx) return {g};
    bool self = (mg.i == mg.j);
    int factor = self ? mg.flip : (mf.i == mg.i ? 0 : 1);
    for (int d2 = 0; d2 < (int)cand.cls_mor.at({mg.i, mg.j}).size(); ++d2) {
      int m2 = cand.cls_mor.at({mg.i, mg.j})[d2];
      if (!self && (cand.mors[m2].dom != mg.dom || cand.mors[m2].cod != mg.cod)) continue;
      int s2 = self ? (mg.flip ^ cand.mors[m2].flip) : 0;
      if (rec.rel_aut.at({mg.i, mg.j, factor, mf.idx, mg.idx, d2, s2})) out.push_back(m2);
    }
    return out;
  }
  // dagger ∘ dagger: f : a→b, g : b→c
  int a = mf.dom, b = mf.cod, c = mg.cod;
  int s1 = (a == b) ? mf.flip : 0;
  int s2 = (b == c) ? mg.flip : 0;
  auto pk = std::make_pair(std::min(a, c), std::max(a, c));
  const auto& target = cand.cls_mor.at(pk);
  for (int dpp = 0; dpp < (int)target.size(); ++dpp) {
    int m2 = target[dpp];
    if (a != c && (cand.mors[m2].dom != a || cand.mors[m2].cod != c)) continue;
    int s3 = (a == c) ? cand.mors[m2].flip : 0;
    if (rec.rel_chain.at({a, b, c, mf.idx, mg.idx, dpp, s1, s2, s3})) out.push_back(m2);
  }
  if (a == c)
    for (int w = 0; w < (int)rec.aut[a].elements.size(); ++w)
      out.push_back(cand.aut_mor[a][w]);
  return out;
}

// Checks every associativity triple whose three lookups are all assigned.
bool assoc_consistent(const Candidate& cand) {
  int M = cand.M();
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (!cand.composable(h, g)) continue;
      int hg = cand.comp[h][g];
      for (int f = 0; f < M; ++f) {
        if (!cand.composable(g, f)) continue;
        int gf = cand.comp[g][f];
        if (hg < 0 || gf < 0) continue;
        int l = cand.comp[h][gf];
        int r = cand.comp[hg][f];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

bool verify_relations(const Candidate& cand) {
  const RecoveredData& rec = cand.rec;
  for (const auto& [key, val] : rec.rel_aut) {
    auto [i, j, factor, w, d1, d2, s2] = key;
    int side = (factor == 0) ? i : j;
    int u = cand.aut_mor[side][w];
    int uinv = cand.aut_mor[side][rec.aut[side].inverse[w]];
    int m1 = cand.cls_mor.at({i, j})[d1];
    int m2 = cand.cls_mor.at({i, j})[d2];
    bool got = false;
    if (i == j) {
      if ((cand.mors[m1].flip ^ cand.mors[m2].flip) == s2) {
        if (factor == cand.mors[m1].flip)
          got = cand.comp[m1][u] == m2 || cand.comp[m1][uinv] == m2;
        else
          got = cand.comp[u][m1] == m2 || cand.comp[uinv][m1] == m2;
      }
    } else if (s2 == 0 && cand.mors[m1].dom == cand.mors[m2].dom &&
               cand.mors[m1].cod == cand.mors[m2].cod) {
      if (cand.mors[m1].dom == side)
        got = cand.comp[m1][u] == m2 || cand.comp[m1][uinv] == m2;
      else
        got = cand.comp[u][m1] == m2 || cand.comp[uinv][m1] == m2;
    }
    if (got != val) return false;
  }
  // A morphism m "runs x→y with bit s": for x ≠ y its endpoints decide; for
  // x == y its flip against the class rep must equal s (forward reading) or
  // 1−s (backward reading).
  auto runs_fwd = [&](int m, int x, int y, int s) {
    if (x == y) return cand.mors[m].flip == s;
    return cand.mors[m].dom == x && cand.mors[m].cod == y && s == 0;
  };
  auto runs_bwd = [&](int m, int x, int y, int s) {
    if (x == y) return cand.mors[m].flip == 1 - s;
    return cand.mors[m].dom == y && cand.mors[m].cod == x && s == 0;
  };
  for (const auto& [key, val] : rec.rel_chain) {
    auto [a, b, c, d, dp, dpp, s1, s2, s3] = key;
    int m1 = cand.cls_mor.at({std::min(a, b), std::max(a, b)})[d];
    int m2 = cand.cls_mor.at({std::min(b, c), std::max(b, c)})[dp];
    int m3 = cand.cls_mor.at({std::min(a, c), std::max(a, c)})[dpp];
    bool got = (runs_fwd(m1, a, b, s1) && runs_fwd(m2, b, c, s2) && runs_fwd(m3, a, c, s3) &&
                cand.comp[m2][m1] == m3) ||
               (runs_bwd(m1, a, b, s1) && runs_bwd(m2, b, c, s2) && runs_bwd(m3, a, c, s3) &&
                cand.comp[m1][m2] == m3);
    if (got != val) return false;
  }
  return true;
}

std::optional<CatPtr> realize(const Candidate& cand) {
  CategoryBuilder bld("recovered");
  std::vector<Obj> objs;
  for (int i = 0; i < cand.k; ++i) objs.push_back(bld.add_object("e" + std::to_string(i)));
  std::vector<Mor> mid(cand.M());
  std::vector<char> is_id(cand.M(), 0);
  for (int m = 0; m < cand.M(); ++m) {
    const CandMor& cm = cand.mors[m];
    if (cm.kind == CandMor::Aut) {
      if (cand.rec.aut[cm.i].identity == cm.idx) {
        mid[m] = bld.identity_of(objs[cm.i]);
        is_id[m] = 1;
        continue;
      }
      mid[m] = bld.add_morphism("u" + std::to_string(cm.i) + "_" + std::to_string(cm.idx),
                                objs[cm.dom], objs[cm.cod]);
    } else {
      mid[m] = bld.add_morphism("v" + std::to_string(cm.i) + "_" + std::to_string(cm.j) + "_" +
                                    std::to_string(cm.idx),
                                objs[cm.dom], objs[cm.cod]);
    }
  }
  for (int g = 0; g < cand.M(); ++g)
    for (int f = 0; f < cand.M(); ++f)
      if (cand.comp[g][f] >= 0 && !is_id[g] && !is_id[f])
        bld.set_compose(mid[g], mid[f], mid[cand.comp[g][f]]);
  ValidationReport report;
  CatPtr result = bld.build(report);
  if (!report.ok()) return std::nullopt;
  return result;
}

std::optional<CatPtr> solve(Candidate& cand) {
  std::vector<std::pair<int, int>> entries;
  for (int g = 0; g < cand.M(); ++g)
    for (int f = 0; f < cand.M(); ++f)
      if (cand.comp[g][f] == -1) entries.emplace_back(g, f);

  std::vector<std::vector<int>> choices;
  for (auto [g, f] : entries) {
    choices.push_back(allowed(cand, g, f));
    if (choices.back().empty()) return std::nullopt;
  }

  std::optional<CatPtr> found;
  std::function<bool(size_t)> dfs = [&](size_t at) -> bool {
    if (at == entries.size()) {
      if (!verify_relations(cand)) return false;
      auto built = realize(cand);
      if (!built) return false;
      found = built;
      return true;
    }
    auto [g, f] = entries[at];
    for (int choice : choices[at]) {
      cand.comp[g][f] = choice;
      if (assoc_consistent(cand) && dfs(at + 1)) return true;
      cand.comp[g][f] = -1;
    }
    return false;
  };
  dfs(0);
  return found;
}

}  // namespace

AssembleResult assemble(const Fragment& frag, const RecoveredData& rec) {
  (void)frag;
  int k = (int)rec.minimal.size();
  // orientation variables: one bit per dagger class (direction for distinct
  // endpoints, flip against the class rep for equal endpoints)
  int bits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) bits += rec.num_classes.at({i, j});

  for (int transposed = 0; transposed < 2; ++transposed) {
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      std::map<std::pair<int, int>, std::vector<int>> orient;
      int bit = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          auto key = std::make_pair(i, j);
          int nc = rec.num_classes.at(key);
          auto& v = orient[key];
          for (int c = 0; c < nc; ++c) v.push_back((int)((mask >> bit++) & 1));
        }
      Candidate cand = make_candidate(rec, transposed != 0, orient);
      auto solved = solve(cand);
      if (solved) return {*solved, transposed != 0};
    }
  }
  throw Error(Errc::InconsistentOrientation,
              "no composition table is consistent with the recovered relations");
}

CompareResult compare_categories(const CatPtr& A, const CatPtr& B) {
  if (!is_connected(*A) || !is_connected(*B))
    throw Error(Errc::NotConnected, "comparison requires connected categories");
  CompareResult out;
  EquivalenceWitness w = are_equivalent(A, B);
  if (w.equivalent) {
    out.equivalent = true;
    out.witness = w;
  }
  EquivalenceWitness wo = are_equivalent(A, opposite(B));
  if (wo.equivalent) {
    out.op_equivalent = true;
    out.op_witness = wo;
  }
  return out;
}

RoundtripResult roundtrip(const CatPtr& X, unsigned seed) {
  Fragment frag = Fragment::build(X, seed);
  RecoveredData rec = recover(frag);
  AssembleResult as = assemble(frag, rec);
  RoundtripResult out;
  out.recovered = as.category;
  out.transposed = as.transposed;
  out.fragment_size = frag.size();
  out.num_minimal = (int)rec.minimal.size();
  out.cmp = compare_categories(X, as.category);
  return out;
}

}  // namespace specat
