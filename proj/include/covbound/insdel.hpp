#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covbound/bounds.hpp"
#include "covbound/code.hpp"

namespace covbound {

// Insertion-deletion distance |a| + |b| - 2 * LCS(a, b).  Words may have
// different lengths.
int insdel_distance(const Word& a, const Word& b);

// Minimum insdel distance over all pairs of distinct codewords.
int code_insdel_distance(const Code& c);

// One structural check of an insdel parameter relation.
struct InsdelCheck {
  std::string name;
  std::string citation;
  bool applicable = true;
  std::string reason;     // set when inapplicable
  int limit = 0;          // upper bound on the insdel distance
  bool holds = false;     // measured distance <= limit
};

struct InsdelReport {
  int n = 0;
  std::uint64_t size = 0;
  int k_eff = 0;          // log_q |C|, floored for nonlinear codes
  bool k_exact = true;    // false when |C| is not a power of q
  int insdel_dist = 0;
  int hamming_dist = 0;
  bool has_all_ones = false;
  std::vector<InsdelCheck> checks;
  // Size bounds with the Hamming distance inferred from the insdel distance
  // (d >= ceil(insdel/2)); each row carries that assumption explicitly.
  std::vector<BoundResult> size_bounds;
};

InsdelReport insdel_report(const Code& c);

}  // namespace covbound
