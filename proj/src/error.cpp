#include "fgct/error.hpp"

namespace fgct {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::NotNormal: return "NotNormal";
    case Errc::HandleMismatch: return "HandleMismatch";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ParseError: return "ParseError";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotGenuineCharacter: return "NotGenuineCharacter";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::StabilizerMismatch: return "StabilizerMismatch";
    case Errc::NotChief: return "NotChief";
    case Errc::NotSemiInvariant: return "NotSemiInvariant";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NonUnique: return "NonUnique";
    case Errc::FormUndefined: return "FormUndefined";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NoneCanonical: return "NoneCanonical";
    case Errc::MultipleCanonical: return "MultipleCanonical";
    case Errc::NotBijective: return "NotBijective";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

ErrorClass error_class(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::UnknownCatalogEntry:
    case Errc::HandleMismatch:
    case Errc::NonAssociative:
    case Errc::NoIdentity:
    case Errc::NoInverse:
    case Errc::InvalidAction:
    case Errc::NotSubgroup:
    case Errc::OrderCapExceeded:
      return ErrorClass::Usage;
    case Errc::NonUnique:
    case Errc::NoneCanonical:
    case Errc::MultipleCanonical:
    case Errc::NotBijective:
    case Errc::NotAMatching:
    case Errc::TheoremViolation:
      return ErrorClass::Theorem;
    default:
      return ErrorClass::Hypothesis;
  }
}

}  // namespace fgct
