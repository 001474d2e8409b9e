#pragma once

#include <cstdint>
#include <vector>

#include "covbound/code.hpp"

namespace covbound {

// Uniform scan-friendly view of a word list.  Binary codes of length <= 64
// are packed into machine words so distance evaluation is xor + popcount;
// everything else stores flat digits.
struct PackedCode {
  int q = 0, n = 0;
  bool binary = false;
  std::vector<std::uint64_t> masks;  // binary path, one mask per word
  std::vector<Fel> flat;             // general path, count*n digits
  std::uint64_t count = 0;
};

PackedCode pack_words(const std::vector<Word>& words, int q, int n);
std::uint64_t pack_binary_word(const Word& w);

// Parallel scan kernels.  Every kernel partitions its index space across
// OpenMP workers and combines per-worker partials with order-independent
// reductions, so results are identical for any worker count.
namespace kernels {

struct RadiusScan {
  int radius = 0;
  std::uint64_t witness_index = 0;  // smallest center index at that depth
};
// Max over all q^n centers of the distance to the nearest codeword.
RadiusScan radius_scan(const PackedCode& c);

struct ListScan {
  std::uint64_t max_count = 0;
  std::uint64_t witness_index = 0;  // smallest center index at that count
};
// Max over all q^n centers of the number of codewords within `radius`.
ListScan list_scan(const PackedCode& c, int radius);

int pairwise_min_distance(const PackedCode& c);

// Weight enumerator A_0..A_n over all q^k codewords.
std::vector<std::uint64_t> weight_histogram(const LinearCode& c);

// dist[s] = weight of the coset leader of syndrome index s, for a full-rank
// parity-check matrix h ((n-k) rows).  Computed by rounds of a data-parallel
// relaxation over the whole syndrome space.
std::vector<std::uint8_t> coset_leader_weights(const Matrix& h);

// Deterministic vector with syndrome index s and weight dist[s], built by
// greedy descent through the dist table.
Word coset_leader_witness(const Matrix& h,
                          const std::vector<std::uint8_t>& dist,
                          std::uint64_t s);

}  // namespace kernels

// Serial reference implementations of the parallel kernels, kept for tests
// and for the kernel benchmark.
namespace reference {

kernels::RadiusScan radius_scan(const PackedCode& c);
kernels::ListScan list_scan(const PackedCode& c, int radius);
int pairwise_min_distance(const PackedCode& c);
std::vector<std::uint64_t> weight_histogram(const LinearCode& c);
std::vector<std::uint8_t> coset_leader_weights(const Matrix& h);

}  // namespace reference

}  // namespace covbound
