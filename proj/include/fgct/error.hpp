#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgct {

/// Failure kinds raised by the library. The CLI maps them onto exit codes
/// through `error_class`.
enum class Errc {
  // group-core
  NonAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  UnknownCatalogEntry,
  InvalidAction,
  NotNormal,
  HandleMismatch,
  NotSubgroup,
  // cyclotomics
  DivisionByZero,
  NotCoprime,
  ParseError,
  // chartab
  NotIrreducible,
  NotGenuineCharacter,
  NotInvariant,
  NotCyclic,
  // clifford
  StabilizerMismatch,
  NotChief,
  NotSemiInvariant,
  HypothesisViolated,
  NonUnique,
  // ramified
  FormUndefined,
  NoSolution,
  NoneCanonical,
  MultipleCanonical,
  NotBijective,
  NotAMatching,
  // isaacs
  EvenOrder,
  // anything that contradicts a proven statement
  TheoremViolation,
};

enum class ErrorClass { Usage, Hypothesis, Theorem };

std::string_view errc_name(Errc code);

/// Hypothesis violations are the caller's fault (exit 2); theorem violations
/// mean the implementation disagrees with mathematics (exit 3).
ErrorClass error_class(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace fgct
