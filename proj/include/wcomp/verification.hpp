#pragma once

// Built-in reproduction battery behind `wcomp verify-examples`.

#include <cstdint>
#include <string>
#include <vector>

namespace wcomp {

struct ClaimResult {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ClaimInfo {
  std::string id;
  std::string claim;
};

const std::vector<ClaimInfo>& verification_claims();

// Runs the claims whose id is in `only` (all of them when empty). Throws
// std::invalid_argument for an unknown id.
std::vector<ClaimResult> run_verification(std::uint64_t seed, const std::vector<std::string>& only = {});

}  // namespace wcomp
