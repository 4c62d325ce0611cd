#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace ncpart {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs acceptance criteria 1..9 (or the subset `only`), printing one
/// `criterion N: PASS|FAIL ...` line per criterion to `out` as it finishes.
/// Tolerances are fixed in the implementation.
std::vector<CriterionResult> run_acceptance(std::ostream& out, int threads = 0, const std::set<int>& only = {});

}  // namespace ncpart
