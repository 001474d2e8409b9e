#include "covbound/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>

#include "covbound/errors.hpp"

namespace covbound {

std::uint64_t pack_binary_word(const Word& w) {
  std::uint64_t m = 0;
  int n = int(w.size());
  for (int j = 0; j < n; ++j)
    if (w[j]) m |= std::uint64_t(1) << (n - 1 - j);
  return m;
}

PackedCode pack_words(const std::vector<Word>& words, int q, int n) {
  PackedCode pc;
  pc.q = q;
  pc.n = n;
  pc.count = words.size();
  pc.binary = (q == 2 && n <= 64);
  if (pc.binary) {
    pc.masks.reserve(words.size());
    for (const Word& w : words) pc.masks.push_back(pack_binary_word(w));
  } else {
    pc.flat.reserve(words.size() * size_t(n));
    for (const Word& w : words)
      pc.flat.insert(pc.flat.end(), w.begin(), w.end());
  }
  return pc;
}

namespace {

inline void odometer_step(Word& w, int q) {
  for (int j = int(w.size()) - 1; j >= 0; --j) {
    if (++w[j] < q) return;
    w[j] = 0;
  }
}

inline int dist_to_flat(const Word& center, const Fel* word, int n) {
  int d = 0;
  for (int j = 0; j < n; ++j) d += (center[j] != word[j]);
  return d;
}

// Distance from one center to the nearest codeword.
inline int min_dist_binary(const PackedCode& c, std::uint64_t x) {
  int best = c.n + 1;
  for (std::uint64_t m : c.masks) {
    int d = __builtin_popcountll(x ^ m);
    if (d < best) best = d;
  }
  return best;
}

inline int min_dist_general(const PackedCode& c, const Word& center) {
  int best = c.n + 1;
  for (std::uint64_t ci = 0; ci < c.count; ++ci) {
    int d = dist_to_flat(center, &c.flat[ci * c.n], c.n);
    if (d < best) best = d;
  }
  return best;
}

}  // namespace

namespace kernels {

RadiusScan radius_scan(const PackedCode& c) {
  if (c.count == 0) fail(Errc::trivial_code, "radius_scan: empty code");
  std::uint64_t space = pow_u64(c.q, c.n);
  int nthreads = omp_get_max_threads();
  std::vector<RadiusScan> partial(nthreads, {-1, 0});

#pragma omp parallel num_threads(nthreads)
  {
    int t = omp_get_thread_num();
    std::uint64_t lo = space / nthreads * t + std::min<std::uint64_t>(t, space % nthreads);
    std::uint64_t hi = lo + space / nthreads + (std::uint64_t(t) < space % nthreads ? 1 : 0);
    RadiusScan local{-1, 0};
    if (c.binary) {
      for (std::uint64_t x = lo; x < hi; ++x) {
        int d = min_dist_binary(c, x);
        if (d > local.radius) {
          local.radius = d;
          local.witness_index = x;
        }
      }
    } else {
      Word center = index_to_word(lo, c.q, c.n);
      for (std::uint64_t x = lo; x < hi; ++x) {
        int d = min_dist_general(c, center);
        if (d > local.radius) {
          local.radius = d;
          local.witness_index = x;
        }
        odometer_step(center, c.q);
      }
    }
    partial[t] = local;
  }

  RadiusScan best{-1, 0};
  for (const RadiusScan& p : partial) {
    if (p.radius > best.radius ||
        (p.radius == best.radius && p.witness_index < best.witness_index))
      best = p;
  }
  return best;
}

ListScan list_scan(const PackedCode& c, int radius) {
  if (radius < 0) fail(Errc::bad_params, "list_scan: negative radius");
  std::uint64_t space = pow_u64(c.q, c.n);
  int nthreads = omp_get_max_threads();
  std::vector<ListScan> partial(nthreads);

#pragma omp parallel num_threads(nthreads)
  {
    int t = omp_get_thread_num();
    std::uint64_t lo = space / nthreads * t + std::min<std::uint64_t>(t, space % nthreads);
    std::uint64_t hi = lo + space / nthreads + (std::uint64_t(t) < space % nthreads ? 1 : 0);
    ListScan local{0, lo};
    if (c.binary) {
      for (std::uint64_t x = lo; x < hi; ++x) {
        std::uint64_t cnt = 0;
        for (std::uint64_t m : c.masks)
          cnt += (__builtin_popcountll(x ^ m) <= radius);
        if (cnt > local.max_count) {
          local.max_count = cnt;
          local.witness_index = x;
        }
      }
    } else {
      Word center = index_to_word(lo, c.q, c.n);
      for (std::uint64_t x = lo; x < hi; ++x) {
        std::uint64_t cnt = 0;
        for (std::uint64_t ci = 0; ci < c.count; ++ci)
          cnt += (dist_to_flat(center, &c.flat[ci * c.n], c.n) <= radius);
        if (cnt > local.max_count) {
          local.max_count = cnt;
          local.witness_index = x;
        }
        odometer_step(center, c.q);
      }
    }
    partial[t] = local;
  }

  ListScan best{0, std::uint64_t(-1)};
  for (const ListScan& p : partial) {
    if (p.max_count > best.max_count ||
        (p.max_count == best.max_count && p.witness_index < best.witness_index))
      best = p;
  }
  return best;
}

int pairwise_min_distance(const PackedCode& c) {
  if (c.count < 2) fail(Errc::trivial_code, "pairwise_min_distance: |C| < 2");
  long long total = (long long)c.count;
  int best = c.n + 1;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < total; ++i) {
    int local = c.n + 1;
    if (c.binary) {
      std::uint64_t mi = c.masks[i];
      for (long long j = i + 1; j < total; ++j) {
        int d = __builtin_popcountll(mi ^ c.masks[j]);
        if (d < local) local = d;
      }
    } else {
      const Fel* wi = &c.flat[i * c.n];
      for (long long j = i + 1; j < total; ++j) {
        const Fel* wj = &c.flat[j * c.n];
        int d = 0;
        for (int t = 0; t < c.n; ++t) d += (wi[t] != wj[t]);
        if (d < local) local = d;
      }
    }
    if (local < best) best = local;
  }
  return best;
}

std::vector<std::uint64_t> weight_histogram(const LinearCode& c) {
  std::uint64_t count = pow_u64(c.q(), c.k());
  int n = c.n();
  int nthreads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> partial(
      nthreads, std::vector<std::uint64_t>(n + 1, 0));

  bool binary = (c.q() == 2 && n <= 64);
  std::vector<std::uint64_t> row_masks;
  if (binary) {
    for (int i = 0; i < c.k(); ++i) {
      Word row(n);
      for (int j = 0; j < n; ++j) row[j] = c.generator().at(i, j);
      row_masks.push_back(pack_binary_word(row));
    }
  }

#pragma omp parallel num_threads(nthreads)
  {
    int t = omp_get_thread_num();
    std::uint64_t lo = count / nthreads * t + std::min<std::uint64_t>(t, count % nthreads);
    std::uint64_t hi = lo + count / nthreads + (std::uint64_t(t) < count % nthreads ? 1 : 0);
    auto& hist = partial[t];
    if (binary) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        std::uint64_t word = 0;
        std::uint64_t bits = i;
        int r = 0;
        while (bits) {
          if (bits & 1) word ^= row_masks[c.k() - 1 - r];
          bits >>= 1;
          ++r;
        }
        ++hist[__builtin_popcountll(word)];
      }
    } else {
      for (std::uint64_t i = lo; i < hi; ++i)
        ++hist[hamming_weight(c.encode(i))];
    }
  }

  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& p : partial)
    for (int w = 0; w <= n; ++w) hist[w] += p[w];
  return hist;
}

namespace {

constexpr std::uint8_t kInf = 0xff;

// For the general-q relaxation we need, for syndrome index s and column j with
// coefficient c, the index of (s_digits - c*h_j).  Adding a fixed digit vector
// is not a fixed index offset (mod-q digits don't carry), so we walk digits
// explicitly in the inner loop; ColumnDelta caches -c*h_j as digit vectors.
struct ColumnDelta {
  std::vector<Fel> digits;  // r digits of -c * h_j
};

}  // namespace

std::vector<std::uint8_t> coset_leader_weights(const Matrix& h) {
  const Field& f = *h.f;
  int q = f.q(), r = h.rows, n = h.cols;
  std::uint64_t space = pow_u64(q, r);

  std::vector<std::uint8_t> cur(space, kInf), next(space);
  cur[0] = 0;

  if (q == 2 && r <= 63) {
    std::vector<std::uint64_t> col(n);
    for (int j = 0; j < n; ++j) {
      std::uint64_t m = 0;
      for (int i = 0; i < r; ++i)
        if (h.at(i, j)) m |= std::uint64_t(1) << (r - 1 - i);
      col[j] = m;
    }
    for (int round = 0; round < n + 1; ++round) {
      bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
      for (long long s = 0; s < (long long)space; ++s) {
        std::uint8_t best = cur[s];
        for (int j = 0; j < n; ++j) {
          std::uint8_t v = cur[s ^ col[j]];
          if (v != kInf && std::uint8_t(v + 1) < best) best = v + 1;
        }
        next[s] = best;
        if (best != cur[s]) changed = true;
      }
      cur.swap(next);
      if (!changed) break;
    }
    return cur;
  }

  // General field: cache the digit vectors of -c*h_j for every column and
  // nonzero coefficient.
  std::vector<ColumnDelta> deltas;
  deltas.reserve(size_t(n) * (q - 1));
  for (int j = 0; j < n; ++j)
    for (int c = 1; c < q; ++c) {
      ColumnDelta d;
      d.digits.resize(r);
      for (int i = 0; i < r; ++i)
        d.digits[i] = f.neg(f.mul(Fel(c), h.at(i, j)));
      deltas.push_back(std::move(d));
    }
  std::vector<std::uint64_t> qpow(r);
  for (int i = 0; i < r; ++i) qpow[i] = pow_u64(q, r - 1 - i);

  for (int round = 0; round < n + 1; ++round) {
    bool changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
    for (long long s = 0; s < (long long)space; ++s) {
      Word digits = index_to_word(std::uint64_t(s), q, r);
      std::uint8_t best = cur[s];
      for (const ColumnDelta& d : deltas) {
        std::uint64_t target = 0;
        for (int i = 0; i < r; ++i)
          target += std::uint64_t(f.add(digits[i], d.digits[i])) * qpow[i];
        std::uint8_t v = cur[target];
        if (v != kInf && std::uint8_t(v + 1) < best) best = v + 1;
      }
      next[s] = best;
      if (best != cur[s]) changed = true;
    }
    cur.swap(next);
    if (!changed) break;
  }
  return cur;
}

Word coset_leader_witness(const Matrix& h,
                          const std::vector<std::uint8_t>& dist,
                          std::uint64_t s) {
  const Field& f = *h.f;
  int q = f.q(), r = h.rows, n = h.cols;
  std::vector<std::uint64_t> qpow(r);
  for (int i = 0; i < r; ++i) qpow[i] = pow_u64(q, r - 1 - i);

  Word digits = index_to_word(s, q, r);
  Word w(n, 0);
  int remaining = dist[s];
  for (int j = 0; j < n && remaining > 0; ++j) {
    for (int c = 1; c < q; ++c) {
      Word cand = digits;
      std::uint64_t target = 0;
      for (int i = 0; i < r; ++i) {
        cand[i] = f.sub(digits[i], f.mul(Fel(c), h.at(i, j)));
        target += std::uint64_t(cand[i]) * qpow[i];
      }
      if (dist[target] == remaining - 1) {
        w[j] = Fel(c);
        digits = cand;
        --remaining;
        break;
      }
    }
  }
  assert(remaining == 0);
  return w;
}

}  // namespace kernels

namespace reference {

kernels::RadiusScan radius_scan(const PackedCode& c) {
  std::uint64_t space = pow_u64(c.q, c.n);
  kernels::RadiusScan best{-1, 0};
  Word center(c.n, 0);
  for (std::uint64_t x = 0; x < space; ++x) {
    int d = c.binary ? min_dist_binary(c, x) : min_dist_general(c, center);
    if (d > best.radius) {
      best.radius = d;
      best.witness_index = x;
    }
    if (!c.binary) odometer_step(center, c.q);
  }
  return best;
}

kernels::ListScan list_scan(const PackedCode& c, int radius) {
  std::uint64_t space = pow_u64(c.q, c.n);
  kernels::ListScan best{0, 0};
  Word center(c.n, 0);
  for (std::uint64_t x = 0; x < space; ++x) {
    std::uint64_t cnt = 0;
    if (c.binary) {
      for (std::uint64_t m : c.masks)
        cnt += (__builtin_popcountll(x ^ m) <= radius);
    } else {
      for (std::uint64_t ci = 0; ci < c.count; ++ci)
        cnt += (dist_to_flat(center, &c.flat[ci * c.n], c.n) <= radius);
    }
    if (cnt > best.max_count) {
      best.max_count = cnt;
      best.witness_index = x;
    }
    if (!c.binary) odometer_step(center, c.q);
  }
  return best;
}

int pairwise_min_distance(const PackedCode& c) {
  int best = c.n + 1;
  for (std::uint64_t i = 0; i < c.count; ++i)
    for (std::uint64_t j = i + 1; j < c.count; ++j) {
      int d;
      if (c.binary) {
        d = __builtin_popcountll(c.masks[i] ^ c.masks[j]);
      } else {
        d = 0;
        for (int t = 0; t < c.n; ++t)
          d += (c.flat[i * c.n + t] != c.flat[j * c.n + t]);
      }
      if (d < best) best = d;
    }
  return best;
}

std::vector<std::uint64_t> weight_histogram(const LinearCode& c) {
  std::uint64_t count = pow_u64(c.q(), c.k());
  std::vector<std::uint64_t> hist(c.n() + 1, 0);
  for (std::uint64_t i = 0; i < count; ++i)
    ++hist[hamming_weight(c.encode(i))];
  return hist;
}

std::vector<std::uint8_t> coset_leader_weights(const Matrix& h) {
  // Breadth-first search from the zero syndrome; each edge appends one more
  // scaled column, so BFS depth = coset-leader weight.
  const Field& f = *h.f;
  int q = f.q(), r = h.rows, n = h.cols;
  std::uint64_t space = pow_u64(q, r);
  std::vector<std::uint64_t> qpow(r);
  for (int i = 0; i < r; ++i) qpow[i] = pow_u64(q, r - 1 - i);

  std::vector<std::uint8_t> dist(space, 0xff);
  dist[0] = 0;
  std::vector<std::uint64_t> frontier{0}, nextf;
  std::uint8_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    nextf.clear();
    for (std::uint64_t s : frontier) {
      Word digits = index_to_word(s, q, r);
      for (int j = 0; j < n; ++j)
        for (int c = 1; c < q; ++c) {
          std::uint64_t target = 0;
          for (int i = 0; i < r; ++i)
            target +=
                std::uint64_t(f.add(digits[i], f.mul(Fel(c), h.at(i, j)))) *
                qpow[i];
          if (dist[target] == 0xff) {
            dist[target] = depth;
            nextf.push_back(target);
          }
        }
    }
    frontier.swap(nextf);
  }
  return dist;
}

}  // namespace reference

}  // namespace covbound
