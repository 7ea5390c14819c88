#include "specat/corpus.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <random>

#include "specat/fixtures.hpp"
#include "specat/functor.hpp"

namespace specat {

namespace {

// Composition-table completion over fixed endpoints. Morphisms 0..n-1 are
// the identities; the rest are the declared generators.
struct TableSearch {
  int n, k;
  std::vector<Obj> dom, cod;                // size n + k
  std::vector<std::vector<Mor>> comp;       // kNone = not composable, -2 = undetermined
  std::vector<std::pair<Mor, Mor>> open;    // undetermined entries, fixed order
  std::function<void(const TableSearch&)> emit;
  std::mt19937* rng = nullptr;              // shuffles candidate order when set
  long long limit = -1;                     // stop after this many completions (<0 = all)
  long long found = 0;

  int total() const { return n + k; }

  void init(int objects, const std::vector<std::pair<Obj, Obj>>& endpoints) {
    n = objects;
    k = (int)endpoints.size();
    dom.clear();
    cod.clear();
    for (int a = 0; a < n; ++a) {
      dom.push_back(a);
      cod.push_back(a);
    }
    for (auto [d, c] : endpoints) {
      dom.push_back(d);
      cod.push_back(c);
    }
    int M = total();
    comp.assign(M, std::vector<Mor>(M, kNone));
    open.clear();
    for (Mor g = 0; g < M; ++g)
      for (Mor f = 0; f < M; ++f) {
        if (dom[g] != cod[f]) continue;
        if (g < n)
          comp[g][f] = f;
        else if (f < n)
          comp[g][f] = g;
        else {
          comp[g][f] = -2;
          open.emplace_back(g, f);
        }
      }
  }

  bool assoc_ok() const {
    int M = total();
    for (Mor h = 0; h < M; ++h)
      for (Mor g = 0; g < M; ++g) {
        if (dom[h] != cod[g]) continue;
        Mor hg = comp[h][g];
        for (Mor f = 0; f < M; ++f) {
          if (dom[g] != cod[f]) continue;
          Mor gf = comp[g][f];
          if (hg < 0 || gf < 0) continue;
          Mor l = comp[h][gf], r = comp[hg][f];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool dfs(size_t at) {
    if (at == open.size()) {
      ++found;
      emit(*this);
      return limit >= 0 && found >= limit;
    }
    auto [g, f] = open[at];
    std::vector<Mor> cands;
    for (Mor h = 0; h < total(); ++h)
      if (dom[h] == dom[f] && cod[h] == cod[g]) cands.push_back(h);
    if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
    for (Mor h : cands) {
      comp[g][f] = h;
      if (assoc_ok() && dfs(at + 1)) return true;
    }
    comp[g][f] = -2;
    return false;
  }

  CatPtr build(const std::string& name) const {
    CategoryBuilder b(name);
    std::vector<Obj> objs;
    for (int a = 0; a < n; ++a) objs.push_back(b.add_object("o" + std::to_string(a)));
    std::vector<Mor> mid(total());
    for (int a = 0; a < n; ++a) mid[a] = b.identity_of(objs[a]);
    for (Mor m = n; m < total(); ++m)
      mid[m] = b.add_morphism("m" + std::to_string(m - n), objs[dom[m]], objs[cod[m]]);
    for (Mor g = n; g < total(); ++g)
      for (Mor f = n; f < total(); ++f)
        if (dom[g] == cod[f]) b.set_compose(mid[g], mid[f], mid[comp[g][f]]);
    ValidationReport rep;
    return b.build(rep);  // null on law failure (cannot happen after assoc_ok)
  }
};

// Cheap isomorphism invariant for dedup bucketing.
std::vector<int> invariant(const FiniteCategory& c) {
  std::vector<int> inv{c.num_objects(), c.num_morphisms()};
  std::vector<int> hom_sizes;
  for (Obj a = 0; a < c.num_objects(); ++a)
    for (Obj b = 0; b < c.num_objects(); ++b) hom_sizes.push_back((int)c.hom(a, b).size());
  std::sort(hom_sizes.begin(), hom_sizes.end());
  inv.insert(inv.end(), hom_sizes.begin(), hom_sizes.end());
  int isos = 0;
  for (Mor m = 0; m < c.num_morphisms(); ++m) isos += is_isomorphism(c, m);
  inv.push_back(isos);
  return inv;
}

// Endpoint sequences are enumerated as sorted multisets of (dom, cod) codes;
// only sequences minimal under object permutation survive, cutting the
// duplicate-table workload before the isomorphism dedup.
bool endpoints_canonical(int n, const std::vector<int>& codes) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<int> mapped;
    for (int c : codes) mapped.push_back(perm[c / n] * n + perm[c % n]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped < codes) return false;
  }
  return true;
}

}  // namespace

std::vector<CatPtr> generate_corpus(const CorpusOptions& opts) {
  if (opts.max_objects > 3 || opts.max_morphisms > 8 || opts.max_objects < 1 ||
      opts.max_morphisms < 0)
    throw Error(Errc::BoundsTooLarge, "exhaustive corpus caps: 3 objects, 8 non-identity morphisms");

  std::vector<CatPtr> out;
  if (opts.include_fixtures)
    for (const auto& name : fixture_names()) out.push_back(fixture(name));

  std::vector<std::pair<std::vector<int>, int>> seen;  // invariant, index into out
  auto accept = [&](CatPtr cat, const std::string& name) {
    if (!cat || !is_connected(*cat)) return;
    std::vector<int> inv = invariant(*cat);
    for (auto& [i2, idx] : seen)
      if (i2 == inv && find_isomorphism(out[idx], cat)) return;
    auto renamed = std::make_shared<FiniteCategory>(*cat);
    renamed->name = name;
    out.push_back(renamed);
    seen.emplace_back(std::move(inv), (int)out.size() - 1);
  };
  // fixtures participate in dedup so generated duplicates of them are dropped
  for (int i = 0; i < (int)out.size(); ++i) seen.emplace_back(invariant(*out[i]), i);

  if (opts.mode == CorpusMode::Exhaustive) {
    int serial = 0;
    for (int n = 1; n <= opts.max_objects; ++n) {
      for (int k = 0; k <= opts.max_morphisms; ++k) {
        // sorted multisets of endpoint codes
        std::vector<int> codes(k, 0);
        auto run = [&]() {
          if (!endpoints_canonical(n, codes)) return;
          std::vector<std::pair<Obj, Obj>> eps;
          for (int c : codes) eps.emplace_back(c / n, c % n);
          TableSearch ts;
          ts.emit = [&](const TableSearch& t) {
            accept(t.build("corpus_" + std::to_string(serial)), "corpus_" + std::to_string(serial));
            ++serial;
          };
          ts.init(n, eps);
          ts.dfs(0);
        };
        std::function<void(int, int)> rec = [&](int pos, int lo) {
          if (pos == k) {
            run();
            return;
          }
          for (int c = lo; c < n * n; ++c) {
            codes[pos] = c;
            rec(pos + 1, c);
          }
        };
        rec(0, 0);
      }
    }
  } else {
    std::mt19937 rng(opts.seed);
    int made = 0;
    for (int attempt = 0; attempt < opts.count * 40 && made < opts.count; ++attempt) {
      int n = 1 + (int)(rng() % opts.max_objects);
      int k = (int)(rng() % (opts.max_morphisms + 1));
      std::vector<std::pair<Obj, Obj>> eps;
      for (int i = 0; i < k; ++i) eps.emplace_back(rng() % n, rng() % n);
      TableSearch ts;
      size_t before = out.size();
      ts.emit = [&](const TableSearch& t) {
        accept(t.build("rand_" + std::to_string(made)), "rand_" + std::to_string(made));
      };
      ts.rng = &rng;
      ts.limit = 1;
      ts.init(n, eps);
      ts.dfs(0);
      if (out.size() > before) ++made;
    }
  }
  return out;
}

}  // namespace specat
