#pragma once

#include <string>
#include <vector>

namespace covbound {

// One quoted numeric fact, re-derived from scratch by the toolkit.  The
// expected string is frozen registry data; computed is produced at run time
// and the claim passes only on exact string equality.
struct ClaimResult {
  std::string id;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0.0;
};

std::vector<std::string> claim_ids();

// Runs the whole registry (or the single claim named by only_id).  Throws
// Errc::bad_params when only_id names no claim.  Failures never throw; they
// come back with pass = false and the error text in `computed`.
std::vector<ClaimResult> run_claims(const std::string& only_id = "");

}  // namespace covbound
