#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "covbound/code.hpp"
#include "covbound/families.hpp"
#include "covbound/kernels.hpp"

using namespace covbound;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

// Systematic [n, k] binary code with seeded random parity columns: big enough
// that the 2^n-center scans dominate, small enough to finish in seconds.
LinearCode bench_code(int n, int k, std::uint64_t seed) {
  FieldPtr f = field_make(2);
  Matrix g(f, k, n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < k; ++i) {
    g.at(i, i) = 1;
    for (int j = k; j < n; ++j) g.at(i, j) = Fel(rng() & 1);
  }
  return LinearCode(std::move(g));
}

}  // namespace

int main() {
  std::printf("workers: %d\n", omp_get_max_threads());

  // Radius + list scans over 2^18 centers against 2^8 codewords.
  const LinearCode bench = bench_code(18, 8, 0xc0debabe);
  const Code benchc = as_code(bench);
  PackedCode pc = pack_words(benchc.words, benchc.f->q(), benchc.n);

  kernels::RadiusScan rs_par{}, rs_ser{};
  double t_ser = time_ms([&] { rs_ser = reference::radius_scan(pc); });
  double t_par = time_ms([&] { rs_par = kernels::radius_scan(pc); });
  report("radius_scan", t_ser, t_par);
  if (rs_ser.radius != rs_par.radius ||
      rs_ser.witness_index != rs_par.witness_index) {
    std::printf("MISMATCH: serial and parallel radius scans disagree\n");
    return 1;
  }

  kernels::ListScan ls_par{}, ls_ser{};
  t_ser = time_ms([&] { ls_ser = reference::list_scan(pc, 5); });
  t_par = time_ms([&] { ls_par = kernels::list_scan(pc, 5); });
  report("list_scan", t_ser, t_par);
  if (ls_ser.max_count != ls_par.max_count ||
      ls_ser.witness_index != ls_par.witness_index) {
    std::printf("MISMATCH: serial and parallel list scans disagree\n");
    return 1;
  }

  // Coset-leader table for a high-redundancy code.
  const LinearCode golay = make_golay_binary().code;  // 2^11 syndromes
  const Matrix& h = golay.parity_check();
  std::vector<std::uint8_t> cl_ser, cl_par;
  t_ser = time_ms([&] { cl_ser = reference::coset_leader_weights(h); });
  t_par = time_ms([&] { cl_par = kernels::coset_leader_weights(h); });
  report("coset_leader_weights", t_ser, t_par);
  if (cl_ser != cl_par) {
    std::printf("MISMATCH: serial and parallel coset tables disagree\n");
    return 1;
  }

  // Pairwise distance over an explicit word list.
  int pd_ser = 0, pd_par = 0;
  t_ser = time_ms([&] { pd_ser = reference::pairwise_min_distance(pc); });
  t_par = time_ms([&] { pd_par = kernels::pairwise_min_distance(pc); });
  report("pairwise_min_distance", t_ser, t_par);
  if (pd_ser != pd_par) {
    std::printf("MISMATCH: pairwise distances disagree\n");
    return 1;
  }

  std::printf("all kernels agree with the serial reference\n");
  return 0;
}
