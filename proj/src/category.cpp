#include "specat/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace specat {

std::vector<Mor> FiniteCategory::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  for (Mor m = 0; m < num_morphisms(); ++m)
    if (dom_[m] == a && cod_[m] == b) out.push_back(m);
  return out;
}

std::optional<Obj> FiniteCategory::object_by_name(const std::string& n) const {
  for (Obj a = 0; a < num_objects(); ++a)
    if (object_names[a] == n) return a;
  return std::nullopt;
}

std::optional<Mor> FiniteCategory::morphism_by_name(const std::string& n) const {
  for (Mor m = 0; m < num_morphisms(); ++m)
    if (morphism_names[m] == n) return m;
  return std::nullopt;
}

bool FiniteCategory::same_tables(const FiniteCategory& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && identity_ == other.identity_ &&
         comp_ == other.comp_;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues)
    os << errc_name(issue.code) << ": " << issue.detail << "\n";
  return os.str();
}

// ---- CategoryBuilder ----

CategoryBuilder::CategoryBuilder(std::string name) { cat_.name = std::move(name); }

Obj CategoryBuilder::add_object(const std::string& name) {
  if (cat_.object_by_name(name))
    throw Error(Errc::DuplicateId, "object '" + name + "' declared twice");
  Obj a = static_cast<Obj>(cat_.object_names.size());
  cat_.object_names.push_back(name);
  // Implicit identity morphism.
  Mor id = static_cast<Mor>(cat_.morphism_names.size());
  std::string id_name = "id_" + name;
  if (cat_.morphism_by_name(id_name))
    throw Error(Errc::DuplicateId, "morphism '" + id_name + "' declared twice");
  cat_.morphism_names.push_back(id_name);
  cat_.dom_.push_back(a);
  cat_.cod_.push_back(a);
  cat_.identity_.push_back(id);
  for (auto& row : declared_) row.push_back(kNone);
  declared_.emplace_back(cat_.morphism_names.size(), kNone);
  return a;
}

Mor CategoryBuilder::add_morphism(const std::string& name, Obj dom, Obj cod) {
  if (cat_.morphism_by_name(name))
    throw Error(Errc::DuplicateId, "morphism '" + name + "' declared twice");
  if (dom < 0 || dom >= num_objects() || cod < 0 || cod >= num_objects())
    throw Error(Errc::DanglingEndpoint, "morphism '" + name + "' has an unknown endpoint");
  Mor m = static_cast<Mor>(cat_.morphism_names.size());
  cat_.morphism_names.push_back(name);
  cat_.dom_.push_back(dom);
  cat_.cod_.push_back(cod);
  for (auto& row : declared_) row.push_back(kNone);
  declared_.emplace_back(cat_.morphism_names.size(), kNone);
  return m;
}

void CategoryBuilder::set_compose(Mor g, Mor f, Mor h) {
  int n = num_morphisms();
  if (g < 0 || g >= n || f < 0 || f >= n || h < 0 || h >= n)
    throw Error(Errc::UnknownMorphism, "composition entry references an unknown morphism");
  if (cat_.dom_[g] != cat_.cod_[f])
    throw Error(Errc::DomainMismatch,
                "pair (" + cat_.morphism_names[g] + ", " + cat_.morphism_names[f] +
                    ") is not composable");
  if (cat_.dom_[h] != cat_.dom_[f] || cat_.cod_[h] != cat_.cod_[g])
    throw Error(Errc::DomainMismatch,
                "composite '" + cat_.morphism_names[h] + "' has wrong endpoints for " +
                    cat_.morphism_names[g] + "∘" + cat_.morphism_names[f]);
  if (declared_[g][f] != kNone && declared_[g][f] != h)
    throw Error(Errc::DuplicateId,
                "conflicting composites declared for " + cat_.morphism_names[g] + "∘" +
                    cat_.morphism_names[f]);
  declared_[g][f] = h;
}

Obj CategoryBuilder::object(const std::string& name) const {
  auto a = cat_.object_by_name(name);
  if (!a) throw Error(Errc::UnknownObject, "no object named '" + name + "'");
  return *a;
}

Mor CategoryBuilder::morphism(const std::string& name) const {
  auto m = cat_.morphism_by_name(name);
  if (!m) throw Error(Errc::UnknownMorphism, "no morphism named '" + name + "'");
  return *m;
}

CatPtr CategoryBuilder::build(ValidationReport& report) const {
  FiniteCategory c = cat_;
  int n = c.num_morphisms();
  c.comp_ = declared_;
  // Fill identity compositions, checking any explicit declarations agree.
  for (Mor m = 0; m < n; ++m) {
    Mor idd = c.identity_[c.dom_[m]];
    Mor idc = c.identity_[c.cod_[m]];
    if (c.comp_[m][idd] == kNone) c.comp_[m][idd] = m;
    if (c.comp_[idc][m] == kNone) c.comp_[idc][m] = m;
    if (c.comp_[m][idd] != m)
      report.issues.push_back({Errc::LawViolation,
                               c.morphism_names[m] + "∘id ≠ " + c.morphism_names[m]});
    if (c.comp_[idc][m] != m)
      report.issues.push_back({Errc::LawViolation,
                               "id∘" + c.morphism_names[m] + " ≠ " + c.morphism_names[m]});
  }
  // Totality of composition over composable pairs.
  for (Mor g = 0; g < n; ++g)
    for (Mor f = 0; f < n; ++f) {
      if (c.composable(g, f)) {
        if (c.comp_[g][f] == kNone)
          report.issues.push_back(
              {Errc::NonTotalComposition,
               "no composite declared for " + c.morphism_names[g] + "∘" + c.morphism_names[f]});
      } else if (c.comp_[g][f] != kNone) {
        report.issues.push_back(
            {Errc::DomainMismatch,
             "composite declared for non-composable pair " + c.morphism_names[g] + "∘" +
                 c.morphism_names[f]});
      }
    }
  if (!report.ok()) return nullptr;
  // Associativity over all composable triples.
  for (Mor h = 0; h < n; ++h)
    for (Mor g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      Mor hg = c.comp_[h][g];
      for (Mor f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        Mor gf = c.comp_[g][f];
        if (c.comp_[hg][f] != c.comp_[h][gf]) {
          report.issues.push_back(
              {Errc::LawViolation, "associativity fails on (" + c.morphism_names[h] + ", " +
                                       c.morphism_names[g] + ", " + c.morphism_names[f] + ")"});
          if (report.issues.size() > 16) return nullptr;
        }
      }
    }
  if (!report.ok()) return nullptr;
  return std::make_shared<FiniteCategory>(std::move(c));
}

CatPtr CategoryBuilder::build_or_throw() const {
  ValidationReport report;
  CatPtr c = build(report);
  if (!c) throw Error(report.issues.front().code, report.issues.front().detail);
  return c;
}

// ---- Subcategory ----

bool Subcategory::contains_object(Obj a) const {
  return std::find(objects.begin(), objects.end(), a) != objects.end();
}

bool Subcategory::contains_morphism(Mor m) const {
  return std::find(morphisms.begin(), morphisms.end(), m) != morphisms.end();
}

Subcategory::Materialized Subcategory::materialize(const std::string& name) const {
  Materialized out;
  out.obj_index = objects;
  out.mor_index = morphisms;
  std::sort(out.obj_index.begin(), out.obj_index.end());
  std::sort(out.mor_index.begin(), out.mor_index.end());
  std::vector<int> obj_back(parent->num_objects(), kNone);
  std::vector<int> mor_back(parent->num_morphisms(), kNone);
  for (size_t i = 0; i < out.obj_index.size(); ++i) obj_back[out.obj_index[i]] = (int)i;
  for (size_t i = 0; i < out.mor_index.size(); ++i) mor_back[out.mor_index[i]] = (int)i;

  FiniteCategory c;
  c.name = name;
  for (Obj a : out.obj_index) c.object_names.push_back(parent->object_names[a]);
  for (Mor m : out.mor_index) {
    c.morphism_names.push_back(parent->morphism_names[m]);
    c.dom_.push_back(obj_back[parent->dom(m)]);
    c.cod_.push_back(obj_back[parent->cod(m)]);
  }
  c.identity_.resize(c.object_names.size(), kNone);
  for (size_t i = 0; i < out.obj_index.size(); ++i) {
    Mor id = parent->identity(out.obj_index[i]);
    if (mor_back[id] == kNone)
      throw Error(Errc::SemanticError, "subcategory misses identity of an included object");
    c.identity_[i] = mor_back[id];
  }
  int n = (int)out.mor_index.size();
  c.comp_.assign(n, std::vector<Mor>(n, kNone));
  for (int gi = 0; gi < n; ++gi)
    for (int fi = 0; fi < n; ++fi) {
      Mor g = out.mor_index[gi], f = out.mor_index[fi];
      if (!parent->composable(g, f)) continue;
      Mor h = parent->compose(g, f);
      if (mor_back[h] == kNone)
        throw Error(Errc::SemanticError, "subcategory is not closed under composition");
      c.comp_[gi][fi] = mor_back[h];
    }
  out.cat = std::make_shared<FiniteCategory>(std::move(c));
  return out;
}

// ---- structural primitives ----

CatPtr opposite(const CatPtr& cp) {
  const FiniteCategory& c = *cp;
  FiniteCategory o;
  o.name = c.name.empty() ? "op" : c.name + "_op";
  o.object_names = c.object_names;
  o.morphism_names = c.morphism_names;
  o.dom_ = c.cod_;
  o.cod_ = c.dom_;
  o.identity_ = c.identity_;
  int n = c.num_morphisms();
  o.comp_.assign(n, std::vector<Mor>(n, kNone));
  for (Mor g = 0; g < n; ++g)
    for (Mor f = 0; f < n; ++f)
      if (c.comp_[g][f] != kNone) o.comp_[f][g] = c.comp_[g][f];
  return std::make_shared<FiniteCategory>(std::move(o));
}

std::optional<Mor> inverse_of(const FiniteCategory& c, Mor m) {
  for (Mor w : c.hom(c.cod(m), c.dom(m)))
    if (c.compose(w, m) == c.identity(c.dom(m)) && c.compose(m, w) == c.identity(c.cod(m)))
      return w;
  return std::nullopt;
}

bool is_isomorphism(const FiniteCategory& c, Mor m) { return inverse_of(c, m).has_value(); }

bool objects_isomorphic(const FiniteCategory& c, Obj a, Obj b) {
  if (a == b) return true;
  for (Mor m : c.hom(a, b))
    if (is_isomorphism(c, m)) return true;
  return false;
}

std::vector<Mor> mor_brace(const FiniteCategory& c, Obj a, Obj b) {
  std::vector<Mor> out;
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    bool fwd = c.dom(m) == a && c.cod(m) == b;
    bool bwd = c.dom(m) == b && c.cod(m) == a;
    if (fwd || bwd) out.push_back(m);
  }
  return out;
}

std::vector<Mor> mor_brace_noninv(const FiniteCategory& c, Obj a, Obj b) {
  std::vector<Mor> out;
  for (Mor m : mor_brace(c, a, b))
    if (!is_isomorphism(c, m)) out.push_back(m);
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<Obj>> connected_components(const FiniteCategory& c) {
  UnionFind uf(c.num_objects());
  for (Mor m = 0; m < c.num_morphisms(); ++m) uf.unite(c.dom(m), c.cod(m));
  std::map<int, std::vector<Obj>> groups;
  for (Obj a = 0; a < c.num_objects(); ++a) groups[uf.find(a)].push_back(a);
  std::vector<std::vector<Obj>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const FiniteCategory& c) {
  return connected_components(c).size() == 1;
}

Subcategory groupoid_component(const CatPtr& cp, Obj e) {
  const FiniteCategory& c = *cp;
  if (e < 0 || e >= c.num_objects()) throw Error(Errc::UnknownObject, "groupoid basepoint");
  // Flood-fill through isomorphisms from e.
  std::vector<bool> in_obj(c.num_objects(), false);
  std::vector<Obj> stack{e};
  in_obj[e] = true;
  std::vector<bool> iso(c.num_morphisms(), false);
  for (Mor m = 0; m < c.num_morphisms(); ++m) iso[m] = is_isomorphism(c, m);
  while (!stack.empty()) {
    Obj a = stack.back();
    stack.pop_back();
    for (Mor m = 0; m < c.num_morphisms(); ++m) {
      if (!iso[m]) continue;
      Obj other = kNone;
      if (c.dom(m) == a) other = c.cod(m);
      else if (c.cod(m) == a) other = c.dom(m);
      else continue;
      if (!in_obj[other]) {
        in_obj[other] = true;
        stack.push_back(other);
      }
    }
  }
  Subcategory sub;
  sub.parent = cp;
  for (Obj a = 0; a < c.num_objects(); ++a)
    if (in_obj[a]) sub.objects.push_back(a);
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (iso[m] && in_obj[c.dom(m)] && in_obj[c.cod(m)]) sub.morphisms.push_back(m);
  return sub;
}

std::vector<Subcategory> maximal_groupoids(const CatPtr& cp) {
  const FiniteCategory& c = *cp;
  std::vector<Subcategory> out;
  std::vector<bool> seen(c.num_objects(), false);
  for (Obj e = 0; e < c.num_objects(); ++e) {
    if (seen[e]) continue;
    Subcategory g = groupoid_component(cp, e);
    for (Obj a : g.objects) seen[a] = true;
    out.push_back(std::move(g));
  }
  return out;
}

bool is_mono(const FiniteCategory& c, Mor m) {
  Obj a = c.dom(m);
  for (Obj x = 0; x < c.num_objects(); ++x) {
    auto hx = c.hom(x, a);
    for (size_t i = 0; i < hx.size(); ++i)
      for (size_t j = i + 1; j < hx.size(); ++j)
        if (c.compose(m, hx[i]) == c.compose(m, hx[j])) return false;
  }
  return true;
}

bool is_initial_object(const FiniteCategory& c, Obj a) {
  for (Obj b = 0; b < c.num_objects(); ++b)
    if (c.hom(a, b).size() != 1) return false;
  return true;
}

std::vector<Obj> minimal_objects(const FiniteCategory& c) {
  std::vector<bool> initial(c.num_objects());
  for (Obj a = 0; a < c.num_objects(); ++a) initial[a] = is_initial_object(c, a);
  std::vector<Obj> out;
  for (Obj a = 0; a < c.num_objects(); ++a) {
    if (initial[a]) continue;
    bool minimal = true;
    for (Mor m = 0; m < c.num_morphisms() && minimal; ++m) {
      if (c.cod(m) != a || initial[c.dom(m)]) continue;
      if (is_mono(c, m) && !is_isomorphism(c, m)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

Subcategory skeleton(const CatPtr& cp) {
  const FiniteCategory& c = *cp;
  // One representative per iso class: the object with lexicographically least
  // name, so the choice is deterministic under relabeling.
  std::vector<Obj> rep(c.num_objects(), kNone);
  for (Obj a = 0; a < c.num_objects(); ++a) {
    if (rep[a] != kNone) continue;
    Obj best = a;
    std::vector<Obj> cls;
    for (Obj b = 0; b < c.num_objects(); ++b) {
      if (rep[b] == kNone && objects_isomorphic(c, a, b)) {
        cls.push_back(b);
        if (c.object_names[b] < c.object_names[best]) best = b;
      }
    }
    for (Obj b : cls) rep[b] = best;
  }
  Subcategory sub;
  sub.parent = cp;
  std::set<Obj> kept;
  for (Obj a = 0; a < c.num_objects(); ++a) kept.insert(rep[a]);
  sub.objects.assign(kept.begin(), kept.end());
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (kept.count(c.dom(m)) && kept.count(c.cod(m))) sub.morphisms.push_back(m);
  return sub;
}

CatPtr dis(const std::vector<std::string>& elements) {
  CategoryBuilder b("dis");
  for (const auto& e : elements) b.add_object(e);
  return b.build_or_throw();
}

bool is_preorder(const FiniteCategory& c) {
  for (Obj a = 0; a < c.num_objects(); ++a)
    for (Obj b = 0; b < c.num_objects(); ++b)
      if (c.hom(a, b).size() > 1) return false;
  return true;
}

bool is_order(const FiniteCategory& c) {
  if (!is_preorder(c)) return false;
  for (Obj a = 0; a < c.num_objects(); ++a)
    for (Obj b = 0; b < c.num_objects(); ++b)
      if (a != b && !c.hom(a, b).empty() && !c.hom(b, a).empty()) return false;
  return true;
}

}  // namespace specat
