#pragma once

#include <stdexcept>
#include <string>

namespace specat {

enum class Errc {
  DuplicateId,
  DanglingEndpoint,
  NonTotalComposition,
  LawViolation,
  UnknownObject,
  UnknownMorphism,
  NotAnIso,
  DomainMismatch,
  NotFaithful,
  LiftMissing,
  LiftNotUnique,
  NotConnectedGroupoid,
  NotMaximalGroupoid,
  NotInvertible,
  VIsInvertible,
  SameComponent,
  EndomorphismNotClosed,
  NotConnected,
  NotMinimal,
  SizeBound,
  BoundsTooLarge,
  PayloadTooLarge,
  RelationNotReflexiveTransitive,
  FunctorLawViolation,
  SubfunctorViolation,
  MonotonicityViolation,
  NoColimit,
  InconsistentOrientation,
  SearchBudgetExceeded,
  SyntaxError,
  SemanticError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Node budget for backtracking searches. Exhausting it throws; a search never
// silently degrades into a wrong answer.
class SearchBudget {
 public:
  SearchBudget();  // reads SPECAT_BUDGET, defaults to 10^7
  explicit SearchBudget(long long nodes) : remaining_(nodes) {}

  void tick(long long n = 1) {
    remaining_ -= n;
    if (remaining_ < 0) throw Error(Errc::SearchBudgetExceeded, "search node budget exhausted");
  }

  long long remaining() const { return remaining_; }

  static long long default_nodes();

 private:
  long long remaining_;
};

}  // namespace specat
