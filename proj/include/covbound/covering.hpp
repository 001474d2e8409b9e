#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "covbound/code.hpp"

namespace covbound {

// How to establish the covering radius.
//   auto_pick   - coset_leader when the syndrome table fits the budget,
//                 otherwise exhaustive when that fits, otherwise error.
//   exhaustive  - scan all q^n words for the one farthest from the code.
//   coset_leader- syndrome-space relaxation (linear codes only).
//   sample_lower- random deep-hole sampling; yields a LOWER estimate only.
enum class RadiusMethod { auto_pick, exhaustive, coset_leader, sample_lower };

struct RadiusResult {
  int radius = -1;
  std::string method;
  bool exact = true;      // false only for sample_lower
  Word witness;           // a word at distance `radius` from the code
};

RadiusResult covering_radius(const LinearCode& c,
                             RadiusMethod method = RadiusMethod::auto_pick,
                             std::uint64_t sample_seed = 1,
                             std::uint64_t samples = 4096);
RadiusResult covering_radius(const Code& c,
                             RadiusMethod method = RadiusMethod::auto_pick,
                             std::uint64_t sample_seed = 1,
                             std::uint64_t samples = 4096);

// Number of distinct nonzero weights in the dual code (external distance);
// an upper bound on the covering radius.  Enumerates q^(n-k) dual words.
int external_distance(const LinearCode& c);

// Greedy covering-code search: grows a word set until every word of F_q^n is
// within distance R.  Restart 0 breaks ties towards the smallest word index;
// each later restart breaks ties uniformly at random (seeded), and the
// smallest cover found is kept.  The result is re-verified exhaustively.
struct CoverSearchResult {
  Code code;
  int radius = -1;       // verified covering radius of the returned set
  int best_restart = 0;  // restart that produced the returned cover
};

CoverSearchResult greedy_covering_search(int q, int n, int radius,
                                         std::uint64_t seed = 1,
                                         int restarts = 0);

}  // namespace covbound
