#pragma once

#include <cstdint>

#include "covbound/code.hpp"

namespace covbound {

// Ground truth from exhaustive branch-and-bound at tiny parameters.  The
// witness is re-verified through the code/covering machinery before being
// returned, never trusted from the search itself.
struct OracleResult {
  std::uint64_t value = 0;
  Code witness;
  std::uint64_t nodes = 0;
  double ms = 0.0;
};

// Maximum size of a q-ary length-n code with minimum distance >= d: maximum
// clique on F_q^n with edges between vectors at distance >= d.  The first
// codeword is anchored at 0 (translation symmetry); branching is
// lexicographic with a greedy-coloring bound.  Requires q^n <= oracle_cap().
OracleResult exact_A(int q, int n, int d);

// Minimum size of a q-ary length-n code with covering radius <= R: minimum
// set cover by Hamming balls.  One center is anchored at 0; branching covers
// the lowest uncovered point, candidates ordered by fresh coverage; pruning
// floor is ceil(uncovered / best-possible-ball).  Requires q^n <= oracle_cap().
OracleResult exact_K(int q, int n, int R);

}  // namespace covbound
