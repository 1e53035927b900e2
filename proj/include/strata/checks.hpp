#pragma once

#include "strata/enumerate.hpp"

namespace strata {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, empty when passed
};

// Run every invariant suite for the type: enumeration validity, closure
// under contraction, genus-0 tree structure, dimension identities, cover
// grading, the contraction-subset partition, the poset order axioms, nerve
// contractibility, and the isotropy grading.  One result per suite.
std::vector<CheckResult> run_invariant_suites(int g, int n, const EnumerateOptions& opts = {});

}  // namespace strata
