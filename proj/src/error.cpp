#include "specat/error.hpp"

#include <cstdlib>

namespace specat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::NonTotalComposition: return "NonTotalComposition";
    case Errc::LawViolation: return "LawViolation";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::UnknownMorphism: return "UnknownMorphism";
    case Errc::NotAnIso: return "NotAnIso";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotFaithful: return "NotFaithful";
    case Errc::LiftMissing: return "LiftMissing";
    case Errc::LiftNotUnique: return "LiftNotUnique";
    case Errc::NotConnectedGroupoid: return "NotConnectedGroupoid";
    case Errc::NotMaximalGroupoid: return "NotMaximalGroupoid";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::VIsInvertible: return "VIsInvertible";
    case Errc::SameComponent: return "SameComponent";
    case Errc::EndomorphismNotClosed: return "EndomorphismNotClosed";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::SizeBound: return "SizeBound";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    case Errc::PayloadTooLarge: return "PayloadTooLarge";
    case Errc::RelationNotReflexiveTransitive: return "RelationNotReflexiveTransitive";
    case Errc::FunctorLawViolation: return "FunctorLawViolation";
    case Errc::SubfunctorViolation: return "SubfunctorViolation";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::NoColimit: return "NoColimit";
    case Errc::InconsistentOrientation: return "InconsistentOrientation";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "UnknownError";
}

long long SearchBudget::default_nodes() {
  if (const char* env = std::getenv("SPECAT_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

SearchBudget::SearchBudget() : remaining_(default_nodes()) {}

}  // namespace specat
