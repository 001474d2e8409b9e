#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covbound/bounds.hpp"
#include "covbound/code.hpp"

namespace covbound {

// Recovery-set certificate for one coordinate: a set S with j in S,
// |S| <= r + delta - 1, and punctured minimum distance >= delta, so any
// delta-1 erasures inside S (including coordinate j) are recoverable.
struct RecoveryCertificate {
  int coordinate = 0;
  std::vector<int> support;  // sorted, includes `coordinate`
  int delta = 2;
  bool degenerate = false;  // coordinate identically zero: locality undefined
  bool covered = true;      // false: no certificate exists (unchecked symbol)
};

struct LocalityProfile {
  int r = 0;      // max over non-degenerate coordinates
  int delta = 2;
  std::vector<RecoveryCertificate> per_coordinate;
  bool complete = true;  // every coordinate non-degenerate and covered
};

// Locality via dual supports: r_i = (min weight of a dual codeword whose
// support contains i) - 1.  Budget: q^{n-k} dual words.
LocalityProfile locality_profile(const LinearCode& c);

struct RDeltaVerdict {
  bool ok = false;
  std::optional<int> failing_coordinate;
  std::string reason;
  std::vector<RecoveryCertificate> certificates;
};

// Checks that every coordinate has a valid recovery set for (r, delta).
// Supplied certificates are re-verified from scratch; without them the
// search tries subsets by increasing cardinality, lexicographic within a
// cardinality, and the first valid set wins.
RDeltaVerdict verify_r_delta(
    const LinearCode& c, int r, int delta,
    const std::optional<std::vector<RecoveryCertificate>>& certificates = {});

struct LrcQuery {
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 2;
  int q = 0;
  std::optional<int> R;      // half the distance, for the length ceilings
  std::optional<double> c;   // constant for the asymptotic length ceilings
};

// Distance ceilings and (for Singleton-optimal codes) length ceilings.
std::vector<BoundResult> lrc_bounds(const LrcQuery& query);

struct OptimalityReport {
  int r = 0;
  int delta = 2;
  int d = 0;
  int ceiling = 0;
  int defect = 0;  // ceiling - d; 0 = Singleton-optimal
  bool optimal = false;
  std::string bound_name;
  LocalityProfile profile;
};

// Measures (r, d) and compares d against the Singleton-like ceiling at the
// measured locality.  delta = 2 uses the dual-support profile; delta > 2
// searches for the smallest r that verifies.
OptimalityReport classify_optimal(const LinearCode& c, int delta = 2);

}  // namespace covbound
