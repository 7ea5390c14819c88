#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specat/category.hpp"
#include "specat/species.hpp"

namespace specat {

// Parsed form of the line-oriented category file format. Identities are
// implicit: documents never declare id_<object> morphisms or compositions
// involving them, and the serializer never emits them.
struct CategoryDocument {
  struct MorDecl {
    std::string name, dom, cod;
    bool operator==(const MorDecl&) const = default;
  };
  struct CompDecl {
    std::string g, f, h;  // g∘f = h
    bool operator==(const CompDecl&) const = default;
  };
  // Optional species section. E is given by `order` (carrier elements per
  // object), `rel` (strict generating pairs a < b) and `emap` (element maps
  // per morphism); S by `select`.
  struct SpeciesSection {
    std::string name;
    std::map<std::string, std::vector<std::string>> order;
    std::vector<std::array<std::string, 3>> rel;  // object, lesser, greater
    std::map<std::string, std::vector<std::string>> select;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> emap;
    bool operator==(const SpeciesSection&) const = default;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  std::vector<CompDecl> composes;
  std::optional<SpeciesSection> species;

  bool operator==(const CategoryDocument&) const = default;
};

// Throws SyntaxError (with line:column) or SemanticError (unknown
// identifier, duplicate name, duplicate compose).
CategoryDocument parse_document(const std::string& text);

// Canonical text form; parse(serialize(d)) == normalize(d) and serialization
// of a normalized document round-trips byte-identically.
std::string serialize_document(const CategoryDocument& doc);

// Sorted compose/species entries (declaration order of objects and morphisms
// is preserved; it is part of the document's meaning).
CategoryDocument normalize_document(const CategoryDocument& doc);

// Builds the category (implicit identity completion). Law violations are
// reported through `report`; the returned pointer is null when invalid.
CatPtr document_category(const CategoryDocument& doc, ValidationReport& report);
CatPtr document_category_or_throw(const CategoryDocument& doc);

// Inverse direction, for emitting generated categories.
CategoryDocument document_of(const CatPtr& cat);
CategoryDocument document_of(const CatPtr& cat, const StructureSpecies& sigma,
                             const std::string& species_name);

// Reads the species section against the built category. Throws SemanticError
// when the section is absent or inconsistent.
StructureSpecies species_from_document(const CategoryDocument& doc, const CatPtr& cat);

// Reads `order` carriers and `emap` tables contravariantly (u : A → B
// carries f_u : B's carrier → A's carrier), for the topology-species demo.
SetMapCategory setmap_from_document(const CategoryDocument& doc, const CatPtr& cat);

std::string read_text_file(const std::string& path);  // SyntaxError on I/O failure

}  // namespace specat
