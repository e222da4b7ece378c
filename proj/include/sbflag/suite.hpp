#ifndef SBFLAG_SUITE_HPP
#define SBFLAG_SUITE_HPP

#include <string>
#include <vector>

#include "sbflag/oracle.hpp"

namespace sbflag {

enum class SuiteFault {
  None,
  DropR2,  // suppress the square-free rule inside the comparison harness
};

struct SuiteCheck {
  std::string name;
  long cases = 0;
  long mismatches = 0;
  std::string diagnostic;  // first mismatch, when any
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool ok() const {
    for (const auto& c : checks) {
      if (c.mismatches != 0) return false;
    }
    return true;
  }
};

// Every oracle-vs-engine comparison at the configured budget, in a
// fixed deterministic order.
SuiteReport run_oracle_suite(const oracle::EnumerationBudget& budget,
                             SuiteFault fault = SuiteFault::None);

}  // namespace sbflag

#endif
