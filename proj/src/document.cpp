#include "specat/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace specat {

namespace {

struct Token {
  std::string text;
  int line, col;  // 1-based
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<Token> toks;
    int col = 0;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace((unsigned char)raw[i])) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() && !std::isspace((unsigned char)raw[j]) && raw[j] != '#') ++j;
      toks.push_back({raw.substr(i, j - i), line_no, (int)i + 1});
      col = (int)i + 1;
      i = j;
    }
    (void)col;
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

[[noreturn]] void syntax_error(const Token& at, const std::string& msg) {
  throw Error(Errc::SyntaxError, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
}

[[noreturn]] void semantic_error(const Token& at, const std::string& msg) {
  throw Error(Errc::SemanticError,
              std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
}

const Token& expect(const std::vector<Token>& toks, size_t idx, const char* what) {
  if (idx >= toks.size()) syntax_error(toks.back(), std::string("expected ") + what);
  return toks[idx];
}

void expect_literal(const std::vector<Token>& toks, size_t idx, const char* lit) {
  const Token& t = expect(toks, idx, lit);
  if (t.text != lit) syntax_error(t, std::string("expected '") + lit + "'");
}

void expect_end(const std::vector<Token>& toks, size_t idx) {
  if (idx < toks.size()) syntax_error(toks[idx], "unexpected trailing token");
}

}  // namespace

CategoryDocument parse_document(const std::string& text) {
  CategoryDocument doc;
  bool have_category = false;
  bool in_species = false;
  std::set<std::string> obj_names, mor_names;
  std::set<std::pair<std::string, std::string>> comp_keys;

  for (const auto& toks : tokenize(text)) {
    const Token& head = toks[0];
    const std::string& kw = head.text;
    if (kw == "category") {
      if (have_category) semantic_error(head, "duplicate category line");
      doc.name = expect(toks, 1, "category name").text;
      expect_end(toks, 2);
      have_category = true;
    } else if (kw == "object") {
      if (in_species) semantic_error(head, "object declaration after species section");
      const Token& t = expect(toks, 1, "object name");
      expect_end(toks, 2);
      if (!obj_names.insert(t.text).second) semantic_error(t, "duplicate object " + t.text);
      doc.objects.push_back(t.text);
    } else if (kw == "morphism") {
      if (in_species) semantic_error(head, "morphism declaration after species section");
      const Token& t = expect(toks, 1, "morphism name");
      expect_literal(toks, 2, ":");
      const Token& d = expect(toks, 3, "domain");
      expect_literal(toks, 4, "->");
      const Token& c = expect(toks, 5, "codomain");
      expect_end(toks, 6);
      if (!mor_names.insert(t.text).second) semantic_error(t, "duplicate morphism " + t.text);
      if (!obj_names.count(d.text)) semantic_error(d, "unknown object " + d.text);
      if (!obj_names.count(c.text)) semantic_error(c, "unknown object " + c.text);
      doc.morphisms.push_back({t.text, d.text, c.text});
    } else if (kw == "compose") {
      if (in_species) semantic_error(head, "compose declaration after species section");
      const Token& g = expect(toks, 1, "outer morphism");
      const Token& f = expect(toks, 2, "inner morphism");
      expect_literal(toks, 3, "=");
      const Token& h = expect(toks, 4, "composite");
      expect_end(toks, 5);
      auto known = [&](const Token& t) {
        if (mor_names.count(t.text)) return;
        if (t.text.rfind("id_", 0) == 0 && obj_names.count(t.text.substr(3))) return;
        semantic_error(t, "unknown morphism " + t.text);
      };
      known(g);
      known(f);
      known(h);
      if (!comp_keys.insert({g.text, f.text}).second)
        semantic_error(g, "duplicate compose " + g.text + " " + f.text);
      doc.composes.push_back({g.text, f.text, h.text});
    } else if (kw == "species") {
      if (in_species) semantic_error(head, "duplicate species section");
      CategoryDocument::SpeciesSection s;
      s.name = expect(toks, 1, "species name").text;
      expect_end(toks, 2);
      doc.species = std::move(s);
      in_species = true;
    } else if (kw == "order" || kw == "select") {
      if (!in_species) syntax_error(head, kw + " line outside a species section");
      const Token& o = expect(toks, 1, "object name");
      if (!obj_names.count(o.text)) semantic_error(o, "unknown object " + o.text);
      expect_literal(toks, 2, ":");
      std::vector<std::string> elems;
      for (size_t i = 3; i < toks.size(); ++i) elems.push_back(toks[i].text);
      auto& dst = (kw == "order") ? doc.species->order : doc.species->select;
      if (dst.count(o.text)) semantic_error(o, "duplicate " + kw + " line for " + o.text);
      dst.emplace(o.text, std::move(elems));
    } else if (kw == "rel") {
      if (!in_species) syntax_error(head, "rel line outside a species section");
      const Token& o = expect(toks, 1, "object name");
      if (!obj_names.count(o.text)) semantic_error(o, "unknown object " + o.text);
      expect_literal(toks, 2, ":");
      const Token& a = expect(toks, 3, "element");
      expect_literal(toks, 4, "<");
      const Token& b = expect(toks, 5, "element");
      expect_end(toks, 6);
      doc.species->rel.push_back({o.text, a.text, b.text});
    } else if (kw == "emap") {
      if (!in_species) syntax_error(head, "emap line outside a species section");
      const Token& m = expect(toks, 1, "morphism name");
      bool known = mor_names.count(m.text) ||
                   (m.text.rfind("id_", 0) == 0 && obj_names.count(m.text.substr(3)));
      if (!known) semantic_error(m, "unknown morphism " + m.text);
      expect_literal(toks, 2, ":");
      const Token& a = expect(toks, 3, "element");
      expect_literal(toks, 4, "->");
      const Token& b = expect(toks, 5, "element");
      expect_end(toks, 6);
      doc.species->emap[m.text].push_back({a.text, b.text});
    } else {
      syntax_error(head, "unknown directive '" + kw + "'");
    }
  }
  if (!have_category)
    throw Error(Errc::SyntaxError, "1:1: missing category line");
  return doc;
}

CategoryDocument normalize_document(const CategoryDocument& doc) {
  CategoryDocument out = doc;
  std::map<std::string, int> mor_pos;
  for (int i = 0; i < (int)doc.morphisms.size(); ++i) mor_pos[doc.morphisms[i].name] = i;
  auto rank = [&](const std::string& m) {
    auto it = mor_pos.find(m);
    return it == mor_pos.end() ? (int)mor_pos.size() : it->second;
  };
  std::stable_sort(out.composes.begin(), out.composes.end(),
                   [&](const auto& a, const auto& b) {
                     return std::pair(rank(a.g), rank(a.f)) < std::pair(rank(b.g), rank(b.f));
                   });
  if (out.species) {
    std::sort(out.species->rel.begin(), out.species->rel.end());
    for (auto& [m, pairs] : out.species->emap) std::sort(pairs.begin(), pairs.end());
  }
  return out;
}

std::string serialize_document(const CategoryDocument& doc_in) {
  CategoryDocument doc = normalize_document(doc_in);
  std::ostringstream out;
  out << "category " << doc.name << "\n";
  for (const auto& o : doc.objects) out << "object " << o << "\n";
  for (const auto& m : doc.morphisms)
    out << "morphism " << m.name << " : " << m.dom << " -> " << m.cod << "\n";
  for (const auto& c : doc.composes)
    out << "compose " << c.g << " " << c.f << " = " << c.h << "\n";
  if (doc.species) {
    const auto& s = *doc.species;
    out << "species " << s.name << "\n";
    for (const auto& o : doc.objects) {
      auto it = s.order.find(o);
      if (it == s.order.end()) continue;
      out << "order " << o << " :";
      for (const auto& e : it->second) out << " " << e;
      out << "\n";
    }
    for (const auto& r : s.rel) out << "rel " << r[0] << " : " << r[1] << " < " << r[2] << "\n";
    for (const auto& o : doc.objects) {
      auto it = s.select.find(o);
      if (it == s.select.end()) continue;
      out << "select " << o << " :";
      for (const auto& e : it->second) out << " " << e;
      out << "\n";
    }
    for (const auto& [m, pairs] : s.emap)
      for (const auto& [a, b] : pairs) out << "emap " << m << " : " << a << " -> " << b << "\n";
  }
  return out.str();
}

namespace {

struct BuiltNames {
  CategoryBuilder builder;
  std::map<std::string, Obj> obj;
  std::map<std::string, Mor> mor;  // includes id_<object>
};

BuiltNames stage_document(const CategoryDocument& doc) {
  BuiltNames b{CategoryBuilder(doc.name), {}, {}};
  for (const auto& o : doc.objects) {
    Obj a = b.builder.add_object(o);
    b.obj[o] = a;
    b.mor["id_" + o] = b.builder.identity_of(a);
  }
  for (const auto& m : doc.morphisms)
    b.mor[m.name] = b.builder.add_morphism(m.name, b.obj.at(m.dom), b.obj.at(m.cod));
  for (const auto& c : doc.composes) {
    Mor g = b.mor.at(c.g), f = b.mor.at(c.f), h = b.mor.at(c.h);
    if (b.builder.dom(g) != b.builder.cod(f))
      throw Error(Errc::SemanticError, "compose " + c.g + " " + c.f + ": endpoints do not match");
    b.builder.set_compose(g, f, h);
  }
  return b;
}

}  // namespace

CatPtr document_category(const CategoryDocument& doc, ValidationReport& report) {
  return stage_document(doc).builder.build(report);
}

CatPtr document_category_or_throw(const CategoryDocument& doc) {
  return stage_document(doc).builder.build_or_throw();
}

CategoryDocument document_of(const CatPtr& cat) {
  CategoryDocument doc;
  doc.name = cat->name.empty() ? "category" : cat->name;
  for (Obj a = 0; a < cat->num_objects(); ++a) doc.objects.push_back(cat->object_names[a]);
  for (Mor m = 0; m < cat->num_morphisms(); ++m) {
    if (cat->is_identity(m)) continue;
    doc.morphisms.push_back(
        {cat->morphism_names[m], cat->object_names[cat->dom(m)], cat->object_names[cat->cod(m)]});
  }
  for (Mor g = 0; g < cat->num_morphisms(); ++g) {
    if (cat->is_identity(g)) continue;
    for (Mor f = 0; f < cat->num_morphisms(); ++f) {
      if (cat->is_identity(f) || cat->dom(g) != cat->cod(f)) continue;
      doc.composes.push_back({cat->morphism_names[g], cat->morphism_names[f],
                              cat->morphism_names[cat->compose(g, f)]});
    }
  }
  return doc;
}

CategoryDocument document_of(const CatPtr& cat, const StructureSpecies& sigma,
                             const std::string& species_name) {
  CategoryDocument doc = document_of(cat);
  CategoryDocument::SpeciesSection s;
  s.name = species_name;
  for (Obj a = 0; a < cat->num_objects(); ++a) {
    const OrderedSet& o = sigma.E_obj[a];
    s.order[cat->object_names[a]] = o.elements;
    for (int i = 0; i < o.size(); ++i)
      for (int j = 0; j < o.size(); ++j)
        if (i != j && o.leq(i, j))
          s.rel.push_back({cat->object_names[a], o.elements[i], o.elements[j]});
    std::vector<std::string> sel;
    for (int i : sigma.S[a]) sel.push_back(o.elements[i]);
    s.select[cat->object_names[a]] = std::move(sel);
  }
  for (Mor m = 0; m < cat->num_morphisms(); ++m) {
    const OrderedSet& src = sigma.E_obj[cat->dom(m)];
    const OrderedSet& dst = sigma.E_obj[cat->cod(m)];
    for (int i = 0; i < src.size(); ++i)
      s.emap[cat->morphism_names[m]].push_back({src.elements[i], dst.elements[sigma.E_mor[m][i]]});
  }
  doc.species = std::move(s);
  return doc;
}

namespace {

const CategoryDocument::SpeciesSection& require_species(const CategoryDocument& doc) {
  if (!doc.species) throw Error(Errc::SemanticError, "document has no species section");
  return *doc.species;
}

int element_index(const OrderedSet& o, const std::string& name, const std::string& ctx) {
  auto it = std::find(o.elements.begin(), o.elements.end(), name);
  if (it == o.elements.end())
    throw Error(Errc::SemanticError, ctx + ": unknown element " + name);
  return (int)(it - o.elements.begin());
}

std::vector<OrderedSet> read_carriers(const CategoryDocument::SpeciesSection& s,
                                      const CatPtr& cat) {
  std::vector<OrderedSet> E;
  for (Obj a = 0; a < cat->num_objects(); ++a) {
    const std::string& on = cat->object_names[a];
    auto it = s.order.find(on);
    if (it == s.order.end())
      throw Error(Errc::SemanticError, "species section missing order line for " + on);
    E.push_back(discrete_order(it->second));
  }
  for (const auto& r : s.rel) {
    auto ao = cat->object_by_name(r[0]);
    if (!ao) throw Error(Errc::SemanticError, "rel: unknown object " + r[0]);
    Obj a = *ao;
    int i = element_index(E[a], r[1], "rel " + r[0]);
    int j = element_index(E[a], r[2], "rel " + r[0]);
    E[a].le[i][j] = true;
  }
  // transitive closure of the generating pairs
  for (auto& o : E) {
    int n = o.size();
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (o.le[i][k] && o.le[k][j]) o.le[i][j] = true;
    validate_order(o);
  }
  return E;
}

std::vector<int> read_emap(const CategoryDocument::SpeciesSection& s, const CatPtr& cat, Mor m,
                           const OrderedSet& src, const OrderedSet& dst) {
  const std::string& mn = cat->morphism_names[m];
  auto it = s.emap.find(mn);
  if (it == s.emap.end()) {
    if (cat->is_identity(m) && src.elements == dst.elements) {
      std::vector<int> id(src.size());
      for (int i = 0; i < src.size(); ++i) id[i] = i;
      return id;
    }
    throw Error(Errc::SemanticError, "species section missing emap for " + mn);
  }
  std::vector<int> table(src.size(), -1);
  for (const auto& [a, b] : it->second) {
    int i = element_index(src, a, "emap " + mn);
    int j = element_index(dst, b, "emap " + mn);
    if (table[i] != -1) throw Error(Errc::SemanticError, "emap " + mn + ": duplicate entry for " + a);
    table[i] = j;
  }
  for (int i = 0; i < src.size(); ++i)
    if (table[i] == -1)
      throw Error(Errc::SemanticError, "emap " + mn + ": missing entry for " + src.elements[i]);
  return table;
}

}  // namespace

StructureSpecies species_from_document(const CategoryDocument& doc, const CatPtr& cat) {
  const auto& s = require_species(doc);
  StructureSpecies sigma;
  sigma.base = cat;
  sigma.E_obj = read_carriers(s, cat);
  for (Mor m = 0; m < cat->num_morphisms(); ++m)
    sigma.E_mor.push_back(read_emap(s, cat, m, sigma.E_obj[cat->dom(m)], sigma.E_obj[cat->cod(m)]));
  sigma.S.resize(cat->num_objects());
  for (Obj a = 0; a < cat->num_objects(); ++a) {
    const std::string& on = cat->object_names[a];
    auto it = s.select.find(on);
    if (it == s.select.end())
      throw Error(Errc::SemanticError, "species section missing select line for " + on);
    for (const auto& e : it->second)
      sigma.S[a].push_back(element_index(sigma.E_obj[a], e, "select " + on));
    std::sort(sigma.S[a].begin(), sigma.S[a].end());
  }
  return sigma;
}

SetMapCategory setmap_from_document(const CategoryDocument& doc, const CatPtr& cat) {
  const auto& s = require_species(doc);
  SetMapCategory z;
  z.cat = cat;
  std::vector<OrderedSet> carriers = read_carriers(s, cat);
  for (const auto& o : carriers) z.sizes.push_back(o.size());
  for (Mor m = 0; m < cat->num_morphisms(); ++m)
    z.op_map.push_back(read_emap(s, cat, m, carriers[cat->cod(m)], carriers[cat->dom(m)]));
  return z;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace specat
