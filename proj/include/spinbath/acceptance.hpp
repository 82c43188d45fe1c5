// acceptance.hpp — the end-to-end acceptance suite: nine numbered criteria
// with pinned tolerances, exercised by both the `verify` CLI command and the
// acceptance test binary.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinbath::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 12345;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace spinbath::acceptance
