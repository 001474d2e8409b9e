#include "covbound/covering.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"
#include "covbound/kernels.hpp"

namespace covbound {

namespace {

std::optional<std::uint64_t> try_pow(int q, int e) {
  try {
    return pow_u64(std::uint64_t(q), e);
  } catch (const ToolError&) {
    return std::nullopt;
  }
}

std::uint64_t space_size(int q, int n) {
  auto space = try_pow(q, n);
  if (!space) fail(Errc::budget_exceeded, "q^n overflows 64 bits");
  return *space;
}

RadiusResult exhaustive_radius(const PackedCode& pc) {
  std::uint64_t space = space_size(pc.q, pc.n);
  check_budget(space * pc.count, "exhaustive covering-radius scan");
  auto scan = kernels::radius_scan(pc);
  return {scan.radius, "exhaustive", true,
          index_to_word(scan.witness_index, pc.q, pc.n)};
}

RadiusResult sample_radius(const PackedCode& pc, std::uint64_t seed,
                           std::uint64_t samples) {
  std::uint64_t space = space_size(pc.q, pc.n);
  samples = std::min(samples, space);
  check_budget(samples * pc.count, "sampled covering-radius estimate");
  std::mt19937_64 rng(seed);
  RadiusResult best{-1, "sample_lower", false, {}};
  Word w(size_t(pc.n), 0);
  for (std::uint64_t t = 0; t < samples; ++t) {
    std::uint64_t x = rng() % space;
    int d;
    if (pc.binary) {
      d = pc.n + 1;
      for (std::uint64_t m : pc.masks)
        d = std::min(d, __builtin_popcountll(x ^ m));
    } else {
      w = index_to_word(x, pc.q, pc.n);
      d = pc.n + 1;
      for (std::uint64_t ci = 0; ci < pc.count; ++ci) {
        int dd = 0;
        for (int j = 0; j < pc.n; ++j) dd += (w[size_t(j)] != pc.flat[ci * pc.n + j]);
        d = std::min(d, dd);
      }
    }
    if (d > best.radius) {
      best.radius = d;
      best.witness = index_to_word(x, pc.q, pc.n);
    }
  }
  return best;
}

RadiusResult coset_radius(const LinearCode& c) {
  const Matrix& h = c.parity_check();
  std::uint64_t table = space_size(c.field()->q(), c.n() - c.k());
  check_budget(table, "coset-leader table");
  auto dist = kernels::coset_leader_weights(h);
  int radius = 0;
  std::uint64_t arg = 0;
  for (std::uint64_t s = 0; s < dist.size(); ++s)
    if (int(dist[s]) > radius) {
      radius = dist[s];
      arg = s;
    }
  Word witness = kernels::coset_leader_witness(h, dist, arg);
  return {radius, "coset_leader", true, std::move(witness)};
}

}  // namespace

RadiusResult covering_radius(const LinearCode& c, RadiusMethod method,
                             std::uint64_t sample_seed, std::uint64_t samples) {
  const int q = c.field()->q();
  if (method == RadiusMethod::auto_pick) {
    auto table = try_pow(q, c.n() - c.k());
    bool fits = table && *table <= work_budget();
    method = fits ? RadiusMethod::coset_leader : RadiusMethod::exhaustive;
  }
  auto enumerable = [&] {
    auto size = try_pow(q, c.k());
    if (!size || *size > work_budget())
      fail(Errc::budget_exceeded, "codeword enumeration too large");
  };
  switch (method) {
    case RadiusMethod::coset_leader:
      return coset_radius(c);
    case RadiusMethod::exhaustive:
      enumerable();
      return exhaustive_radius(pack_words(materialize(c), q, c.n()));
    case RadiusMethod::sample_lower:
      enumerable();
      return sample_radius(pack_words(materialize(c), q, c.n()), sample_seed,
                           samples);
    default:
      fail(Errc::bad_params, "unresolved radius method");
  }
}

RadiusResult covering_radius(const Code& c, RadiusMethod method,
                             std::uint64_t sample_seed, std::uint64_t samples) {
  if (c.words.empty()) fail(Errc::trivial_code, "empty code has no covering radius");
  if (method == RadiusMethod::coset_leader)
    fail(Errc::method_inapplicable, "coset_leader needs a linear code");
  if (method == RadiusMethod::auto_pick) method = RadiusMethod::exhaustive;
  PackedCode pc = pack_words(c.words, c.f->q(), c.n);
  if (method == RadiusMethod::sample_lower)
    return sample_radius(pc, sample_seed, samples);
  return exhaustive_radius(pc);
}

int external_distance(const LinearCode& c) {
  LinearCode d = dual(c);
  auto size = try_pow(c.field()->q(), d.k());
  if (!size || *size > work_budget())
    fail(Errc::budget_exceeded, "dual enumeration too large");
  auto hist = kernels::weight_histogram(d);
  int distinct = 0;
  for (int w = 1; w <= c.n(); ++w) distinct += (hist[size_t(w)] != 0);
  return distinct;
}

namespace {

// Calls fn(index) for every word within Hamming distance `radius` of the word
// with the given index (the word itself included).
template <typename Fn>
void for_ball(const Word& center, std::uint64_t center_index, int q, int radius,
              const std::vector<std::uint64_t>& qpow, Fn&& fn) {
  fn(center_index);
  if (radius == 0) return;
  const int n = int(center.size());
  // depth-first choice of modified positions (increasing) and their new digits
  std::function<void(int, std::uint64_t, int)> rec = [&](int from, std::uint64_t idx,
                                                         int left) {
    for (int j = from; j < n; ++j) {
      std::uint64_t base = idx - std::uint64_t(center[size_t(j)]) * qpow[size_t(j)];
      for (int v = 0; v < q; ++v) {
        if (v == center[size_t(j)]) continue;
        std::uint64_t nidx = base + std::uint64_t(v) * qpow[size_t(j)];
        fn(nidx);
        if (left > 1) rec(j + 1, nidx, left - 1);
      }
    }
  };
  rec(0, center_index, radius);
}

}  // namespace

CoverSearchResult greedy_covering_search(int q, int n, int radius,
                                         std::uint64_t seed, int restarts) {
  if (q < 2 || n < 1 || radius < 0) fail(Errc::bad_params, "bad search parameters");
  field_make(q);  // validates q
  if (restarts < 0) restarts = 0;
  std::uint64_t space = space_size(q, n);
  // ball volume: the per-point cost of one gain-recomputation pass
  std::uint64_t ball = 0, binom = 1, qm1 = 1;
  for (int j = 0; j <= std::min(radius, n); ++j) {
    ball += binom * qm1;
    if (ball > space) { ball = space; break; }
    binom = binom * std::uint64_t(n - j) / std::uint64_t(j + 1);
    qm1 *= std::uint64_t(q - 1);
  }
  check_budget(space * ball, "greedy cover search");

  std::vector<std::uint64_t> qpow(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) qpow[size_t(j)] = space_size(q, n - 1 - j);

  std::vector<std::uint64_t> best_centers;
  int best_restart = 0;

  for (int r = 0; r <= restarts; ++r) {
    std::mt19937_64 rng(seed + std::uint64_t(r));
    std::vector<char> covered(space, 0);
    std::uint64_t uncovered = space;
    std::vector<std::uint64_t> centers;
    std::vector<std::uint32_t> gain(space);

    while (uncovered > 0) {
      std::fill(gain.begin(), gain.end(), 0);
      for (std::uint64_t x = 0; x < space; ++x) {
        if (covered[x]) continue;
        Word w = index_to_word(x, q, n);
        for_ball(w, x, q, radius, qpow,
                 [&](std::uint64_t cidx) { ++gain[cidx]; });
      }
      std::uint32_t best_gain = 0;
      for (std::uint64_t c = 0; c < space; ++c) best_gain = std::max(best_gain, gain[c]);
      std::uint64_t pick = 0;
      if (r == 0) {
        for (std::uint64_t c = 0; c < space; ++c)
          if (gain[c] == best_gain) { pick = c; break; }
      } else {
        std::vector<std::uint64_t> tied;
        for (std::uint64_t c = 0; c < space; ++c)
          if (gain[c] == best_gain) tied.push_back(c);
        pick = tied[rng() % tied.size()];
      }
      centers.push_back(pick);
      Word w = index_to_word(pick, q, n);
      for_ball(w, pick, q, radius, qpow, [&](std::uint64_t x) {
        if (!covered[x]) {
          covered[x] = 1;
          --uncovered;
        }
      });
    }
    if (best_centers.empty() || centers.size() < best_centers.size()) {
      best_centers = std::move(centers);
      best_restart = r;
    }
  }

  std::sort(best_centers.begin(), best_centers.end());
  Code out;
  out.f = field_make(q);
  out.n = n;
  for (std::uint64_t c : best_centers) out.words.push_back(index_to_word(c, q, n));
  RadiusResult verify = covering_radius(out, RadiusMethod::exhaustive);
  if (verify.radius > radius)
    fail(Errc::self_check_failed, "greedy cover exceeds requested radius");
  return {std::move(out), verify.radius, best_restart};
}

}  // namespace covbound
