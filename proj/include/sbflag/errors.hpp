#ifndef SBFLAG_ERRORS_HPP
#define SBFLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbflag {

enum class Errc {
  InvalidDenominator,
  InvalidDescriptor,
  InsufficientExtensions,
  NotInBrauerGroup,
  InvalidLocalInvariant,
  InvalidExtension,
  UnrealizableRequest,
  LemmaPreconditionsFailed,
  ConstructionFailed,
  InvalidTarget,
  InvalidAlgebra,
  UnsupportedForAbstract,
  InvalidIndex,
  InvalidFlags,
  InvalidHypotheses,
  NoProperSubextension,
  NotInAY,
  BudgetExceeded,
  MalformedInput,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace sbflag

#endif
