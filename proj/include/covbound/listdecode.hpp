#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covbound/code.hpp"
#include "covbound/covering.hpp"

namespace covbound {

// Result of the exhaustive list-size scan: the largest number of codewords in
// any radius-`radius` ball, with the lexicographically smallest center
// achieving it.  C is (radius, L) list-decodable iff max_count <= L.
struct ListProfile {
  int radius = 0;
  std::uint64_t max_count = 0;
  Word witness_center;
};

ListProfile max_list_size(const Code& c, int radius);

// Empirical check of the covering-code size bound |C| <= L |C'| with
// L = max_list_size(c, radius): verifies the cover's radius exactly, measures
// L, and reports the per-ball census around the cover's words.  A violation
// is impossible when the preconditions hold; if one is ever produced it
// carries the offending cover word as a counterexample.
struct CoveringBoundCheck {
  bool holds = false;
  std::uint64_t code_size = 0;
  std::uint64_t cover_size = 0;
  std::uint64_t list_size = 0;     // measured L
  int cover_radius = 0;            // verified exactly
  ListProfile profile;
  // census[c] = number of cover words with exactly c codewords in their ball
  std::vector<std::uint64_t> census;
  std::optional<Word> counterexample;
};

CoveringBoundCheck verify_covering_bound(const Code& c, const Code& cover,
                                         int radius);

}  // namespace covbound
