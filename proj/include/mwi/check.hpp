#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwi/index.hpp"

namespace mwi {

struct CheckReport {
  int64_t checks = 0;  // number of conditions evaluated
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Re-derives every layer and compares against the stored one. Structural
// checks always run; with the build text retained the automaton is rebuilt
// from it and compared field by field, and for texts up to `oracle_limit`
// (<=0: the CDWG_ORACLE_CAP default) all four word sets are compared against
// the brute-force oracle. Behavioral checks are skipped once a structural
// failure is found, since the enumerators assume an intact index.
CheckReport check_index(const Index& ix, int64_t oracle_limit = 0);

}  // namespace mwi
