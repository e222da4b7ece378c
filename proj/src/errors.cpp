#include "sbflag/errors.hpp"

namespace sbflag {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidDenominator: return "invalid-denominator";
    case Errc::InvalidDescriptor: return "invalid-descriptor";
    case Errc::InsufficientExtensions: return "insufficient-extensions";
    case Errc::NotInBrauerGroup: return "not-in-brauer-group";
    case Errc::InvalidLocalInvariant: return "invalid-local-invariant";
    case Errc::InvalidExtension: return "invalid-extension";
    case Errc::UnrealizableRequest: return "unrealizable-request";
    case Errc::LemmaPreconditionsFailed: return "lemma-preconditions-failed";
    case Errc::ConstructionFailed: return "construction-failed";
    case Errc::InvalidTarget: return "invalid-target";
    case Errc::InvalidAlgebra: return "invalid-algebra";
    case Errc::UnsupportedForAbstract: return "unsupported-for-abstract";
    case Errc::InvalidIndex: return "invalid-index";
    case Errc::InvalidFlags: return "invalid-flags";
    case Errc::InvalidHypotheses: return "invalid-hypotheses";
    case Errc::NoProperSubextension: return "no-proper-subextension";
    case Errc::NotInAY: return "not-in-AY";
    case Errc::BudgetExceeded: return "budget-exceeded";
    case Errc::MalformedInput: return "malformed-input";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace sbflag
