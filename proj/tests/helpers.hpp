#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "covbound/code.hpp"
#include "covbound/matrix.hpp"

namespace testutil {

// Systematic [I | A] generator with uniformly random A entries.
inline covbound::LinearCode random_systematic_code(int q, int n, int k,
                                                   std::uint64_t seed) {
  auto f = covbound::field_make(q);
  covbound::Matrix g(f, k, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, q - 1);
  for (int r = 0; r < k; ++r) {
    g.at(r, r) = 1;
    for (int c = k; c < n; ++c)
      g.at(r, c) = static_cast<covbound::Fel>(pick(rng));
  }
  return covbound::LinearCode(g);
}

// Random nonlinear code: greedily keep sampled words at pairwise distance >= d.
inline covbound::Code random_packing(int q, int n, int d, std::uint64_t seed,
                                     int attempts = 60) {
  auto f = covbound::field_make(q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, q - 1);
  std::vector<covbound::Word> kept;
  for (int t = 0; t < attempts; ++t) {
    covbound::Word w(n);
    for (auto& x : w) x = static_cast<covbound::Fel>(pick(rng));
    bool ok = true;
    for (const auto& v : kept)
      if (covbound::hamming_distance(w, v) < d) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(std::move(w));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return covbound::Code{f, n, std::move(kept), false};
}

}  // namespace testutil
