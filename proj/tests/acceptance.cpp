// Acceptance gate: twelve externally checkable facts, one line each.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "covbound/bounds.hpp"
#include "covbound/claims.hpp"
#include "covbound/config.hpp"
#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/families.hpp"
#include "covbound/insdel.hpp"
#include "covbound/listdecode.hpp"
#include "covbound/lrc.hpp"
#include "covbound/oracle.hpp"
#include "covbound/tables.hpp"
#include "helpers.hpp"

using namespace covbound;

#define EXPECT(cond, msg)                                  \
  do {                                                     \
    if (!(cond)) {                                         \
      std::fprintf(stderr, "  FAIL detail: %s\n", msg);    \
      return false;                                        \
    }                                                      \
  } while (0)

// 1. Coset-leader radii of the four perfect codes, zero tolerance.
static bool criterion1() {
  struct Probe {
    FamilyCode fc;
    int radius;
  };
  Probe probes[] = {{make_hamming(2, 3), 1},
                    {make_hamming(2, 4), 1},
                    {make_golay_binary(), 3},
                    {make_golay_ternary(), 2}};
  for (const auto& p : probes) {
    auto res = covering_radius(p.fc.code, RadiusMethod::coset_leader);
    EXPECT(res.exact, "coset-leader radius must be exact");
    if (res.radius != p.radius) {
      std::fprintf(stderr, "  FAIL detail: %s radius %d, expected %d\n",
                   p.fc.name.c_str(), res.radius, p.radius);
      return false;
    }
  }
  return true;
}

// 2. First-order Reed-Muller at m=4 has covering radius exactly 6.
static bool criterion2() {
  auto rm = make_reed_muller1(4);
  auto res = covering_radius(rm.code, RadiusMethod::coset_leader);
  EXPECT(res.exact, "radius must be exact");
  EXPECT(res.radius == 6, "rm1(4) covering radius must be 6");
  return true;
}

// 3. Reed-Solomon [7,3] over GF(7) has covering radius exactly n-k = 4.
static bool criterion3() {
  auto rs = make_reed_solomon(7, 7, 3);
  auto res = covering_radius(rs.code, RadiusMethod::coset_leader);
  EXPECT(res.exact, "radius must be exact");
  EXPECT(res.radius == 4, "RS(7,3)/GF(7) covering radius must be 4");
  return true;
}

// 4. Kasami m=2: weights {6,8,10}; the dual's distinct-dual-weight radius
//    bound is 3 and the dual's exact radius respects it.
static bool criterion4() {
  auto kas = make_kasami(2);
  auto wd = weight_distribution(kas.code);
  std::set<int> nz;
  for (int w = 1; w < int(wd.size()); ++w)
    if (wd[w] > 0) nz.insert(w);
  EXPECT((nz == std::set<int>{6, 8, 10}), "kasami(2) weights must be {6,8,10}");
  LinearCode dual_code = dual(kas.code);
  EXPECT(external_distance(dual_code) == 3,
         "distinct nonzero weights of kasami(2) must number 3");
  auto exact = covering_radius(dual_code, RadiusMethod::coset_leader);
  EXPECT(exact.exact, "dual radius must be exact");
  EXPECT(exact.radius <= 3, "dual exact radius must be within the bound");
  return true;
}

// 5. The ladder at (q=2, n=16, d=7) carries the stored-cover bound 192, and
//    rearranged it forces list size >= 3 on a [16,9,4] code at radius 3.
static bool criterion5() {
  CodeParams p;
  p.q = 2;
  p.n = 16;
  p.d = 7;
  auto lad = bound_ladder(p);
  const BoundResult* cov = nullptr;
  for (const auto& row : lad.rows)
    if (row.name == "covering_code") cov = &row;
  EXPECT(cov && cov->applicable, "covering row must be applicable");
  EXPECT(*cov->value == 192, "covering row must report 192");
  // [16,9,4] at radius 3: |C| = 512 exceeds the L=2 cover bound, so L >= 3.
  VerifiedCover kv{192, 16, 3, true, "stored table"};
  EXPECT(*covering_code_bound(kv, 16, 3, 2).value < 512,
         "L=2 must be impossible for 512 words");
  EXPECT(*covering_code_bound(kv, 16, 3, 3).value >= 512,
         "L=3 must be admissible for 512 words");
  return true;
}

// 6. The two-block construction is a [14,8] code of exact radius 2: radius 1
//    is impossible by counting, radius 2 is delivered and verified.
static bool criterion6() {
  auto bd = make_block_diagonal(2, 3, 2);
  EXPECT(bd.code.n() == 14 && bd.code.k() == 8, "shape must be [14,8]");
  EXPECT((std::uint64_t(1) << 8) * 15 < (std::uint64_t(1) << 14),
         "radius-1 balls cannot cover F_2^14");
  EXPECT(bd.advertised_radius && *bd.advertised_radius == 2,
         "construction promises radius 2");
  auto res = covering_radius(bd.code, RadiusMethod::coset_leader);
  EXPECT(res.exact && res.radius == 2, "exact radius must equal 2");
  return true;
}

// 7. Exact packing numbers, ladder soundness against them, and the
//    shortening inequality A_q(n,d) <= q A_q(n-1,d) across the in-cap grid.
static bool criterion7() {
  struct Pin {
    int n;
    std::uint64_t a;
  };
  for (Pin pin : {Pin{3, 2}, Pin{4, 2}, Pin{5, 4}}) {
    auto res = exact_A(2, pin.n, 3);
    if (res.value != pin.a) {
      std::fprintf(stderr, "  FAIL detail: A_2(%d,3) = %llu, expected %llu\n",
                   pin.n, (unsigned long long)res.value,
                   (unsigned long long)pin.a);
      return false;
    }
    CodeParams p;
    p.q = 2;
    p.n = pin.n;
    p.d = 3;
    for (const auto& row : bound_ladder(p).rows) {
      if (!row.applicable || !row.value || !row.counts_for_tightest) continue;
      if (*row.value < long(pin.a)) {
        std::fprintf(stderr, "  FAIL detail: %s at n=%d undercuts A\n",
                     row.name.c_str(), pin.n);
        return false;
      }
    }
  }

  // 128 keeps every branch-and-bound cell in the grid fast; 2^8 = 256 would
  // pull in A_2(8,3), a clique instance far beyond this solver.
  std::uint64_t saved = oracle_cap();
  set_oracle_cap(128);
  std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  auto a_of = [&memo](int q, int n, int d) {
    auto key = std::make_tuple(q, n, d);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, exact_A(q, n, d).value).first;
    return it->second;
  };
  bool ok = true;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    for (int n = 2; ok; ++n) {
      bool fits = true;
      std::uint64_t space = 1;
      for (int i = 0; i < n; ++i) {
        space *= std::uint64_t(q);
        if (space > oracle_cap()) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
      for (int d = 2; d <= n && ok; ++d) {
        std::uint64_t big = a_of(q, n, d);
        std::uint64_t small = a_of(q, n - 1, d);
        if (big > std::uint64_t(q) * small) {
          std::fprintf(stderr,
                       "  FAIL detail: A_%d(%d,%d) = %llu > %d * A(%d,%d) = "
                       "%llu\n",
                       q, n, d, (unsigned long long)big, q, n - 1, d,
                       (unsigned long long)(std::uint64_t(q) * small));
          ok = false;
        }
      }
    }
  }
  set_oracle_cap(saved);
  return ok;
}

// 8. Sphere-packing with list size on the pinned instances.
static bool criterion8() {
  CodeParams golay;
  golay.q = 2;
  golay.n = 23;
  golay.d_list = 3;
  EXPECT(*sphere_packing_list(golay).value == 4096,
         "sphere packing at (2,23,3) must give 4096");
  CodeParams mid;
  mid.q = 2;
  mid.n = 16;
  mid.d_list = 3;
  EXPECT(*sphere_packing_list(mid).value == 94,
         "sphere packing at (2,16,3) must give 94");
  return true;
}

// 9. 500 seeded trials of the covering-size inequality |C| <= L |C'|.
static bool criterion9() {
  std::mt19937_64 rng(0x5eed5eedULL);
  int violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = int(3 + rng() % 8);         // 3..10
    int radius = 1 + int(rng() % 2);    // 1..2
    auto cover = greedy_covering_search(2, n, radius, rng(), 0);
    auto code = testutil::random_packing(2, n, 2 * radius + 1, rng(), 40);
    if (code.size() == 0) continue;
    auto chk = verify_covering_bound(code, cover.code, radius);
    if (!chk.holds || chk.counterexample.has_value()) {
      std::fprintf(stderr, "  FAIL detail: trial %d n=%d R=%d violated\n",
                   trial, n, radius);
      ++violations;
    }
  }
  EXPECT(violations == 0, "covering-size inequality must never fail");
  return true;
}

// 10. Insdel distance: metric axioms, the 2x Hamming ceiling, and the
//     half-Singleton ceiling over every binary [4,1] code.
static bool criterion10() {
  std::mt19937_64 rng(0xd15ULL);
  auto random_word = [&rng](int len, int q) {
    Word w(len);
    for (auto& x : w) x = Fel(rng() % q);
    return w;
  };
  for (int t = 0; t < 1000; ++t) {
    int q = 2 + int(rng() % 3);
    Word a = random_word(int(1 + rng() % 10), q);
    Word b = random_word(int(1 + rng() % 10), q);
    Word c = random_word(int(1 + rng() % 10), q);
    int ab = insdel_distance(a, b);
    EXPECT(ab == insdel_distance(b, a), "insdel distance must be symmetric");
    EXPECT((ab == 0) == (a == b), "insdel distance must separate points");
    EXPECT(ab <= insdel_distance(a, c) + insdel_distance(c, b),
           "insdel distance must satisfy the triangle inequality");
  }
  for (int t = 0; t < 1000; ++t) {
    int q = 2 + int(rng() % 3);
    int len = int(1 + rng() % 10);
    Word a = random_word(len, q);
    Word b = random_word(len, q);
    EXPECT(insdel_distance(a, b) <= 2 * hamming_distance(a, b),
           "insdel distance must be at most twice the Hamming distance");
  }
  auto f = field_make(2);
  for (int gen = 1; gen < 16; ++gen) {
    Matrix g(f, 1, 4);
    for (int i = 0; i < 4; ++i) g.at(0, i) = Fel((gen >> (3 - i)) & 1);
    auto c = as_code(LinearCode{g});
    EXPECT(code_insdel_distance(c) <= 2 * (4 - 2 * 1 + 2),
           "every binary [4,1] code obeys the half-Singleton ceiling");
  }
  return true;
}

// 11. Locality: the replicated [4,2,2] code is Singleton-optimal at r=1, and
//     the delta=2 search agrees with the dual-support profile on 100 codes.
static bool criterion11() {
  auto f = field_make(2);
  Matrix g(f, 2, 4);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  g.at(1, 2) = 1;
  g.at(1, 3) = 1;
  auto rep = classify_optimal(LinearCode{g});
  EXPECT(rep.r == 1 && rep.d == 2 && rep.optimal,
         "replicated [4,2,2] must be Singleton-optimal at r=1");

  std::mt19937_64 rng(0x10ca1ULL);
  int checked = 0;
  while (checked < 100) {
    int q = (rng() % 2) ? 2 : 3;
    int n = int(4 + rng() % 7);  // 4..10
    int k = int(2 + rng() % std::min(4, n - 2));
    auto c = testutil::random_systematic_code(q, n, k, rng());
    LocalityProfile prof;
    try {
      prof = locality_profile(c);
    } catch (const ToolError&) {
      continue;
    }
    if (!prof.complete) continue;
    if (!verify_r_delta(c, prof.r, 2).ok) {
      std::fprintf(stderr, "  FAIL detail: search rejects profile r=%d\n",
                   prof.r);
      return false;
    }
    if (prof.r >= 2 && verify_r_delta(c, prof.r - 1, 2).ok) {
      std::fprintf(stderr, "  FAIL detail: search beats profile r=%d\n",
                   prof.r);
      return false;
    }
    ++checked;
  }
  return true;
}

// 12. The verification run is byte-identical across repeats and worker counts.
static bool criterion12() {
  const char* bin = std::getenv("COVBOUND_BIN");
  EXPECT(bin != nullptr, "COVBOUND_BIN must point at the binary");
  auto capture = [bin](const char* env) {
    std::string cmd = std::string(env) + " \"" + bin +
                      "\" verify paper --format json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::pair<int, std::string> res{-1, ""};
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
      res.second.append(buf, got);
    int rc = pclose(pipe);
    res.first = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
  };
  auto one_a = capture("OMP_NUM_THREADS=1");
  auto one_b = capture("OMP_NUM_THREADS=1");
  auto four_a = capture("OMP_NUM_THREADS=4");
  auto four_b = capture("OMP_NUM_THREADS=4");
  EXPECT(one_a.first == 0 && one_b.first == 0 && four_a.first == 0 &&
             four_b.first == 0,
         "verify runs must succeed");
  EXPECT(!one_a.second.empty(), "verify output must be nonempty");
  EXPECT(one_a.second == one_b.second, "repeat runs must match byte-for-byte");
  EXPECT(one_a.second == four_a.second,
         "1-worker and 4-worker outputs must match byte-for-byte");
  EXPECT(four_a.second == four_b.second,
         "4-worker repeats must match byte-for-byte");
  return true;
}

int main() {
  struct Criterion {
    const char* what;
    bool (*fn)();
  };
  const Criterion table[] = {
      {"perfect-code covering radii (Hamming 7/15, Golay 23/11)", criterion1},
      {"first-order Reed-Muller m=4 radius 6", criterion2},
      {"Reed-Solomon [7,3]/GF(7) radius 4", criterion3},
      {"Kasami m=2 weights and dual radius bound", criterion4},
      {"stored-cover ladder bound 192 and forced list size 3", criterion5},
      {"two-block [14,8] code has exact radius 2", criterion6},
      {"exact packing numbers vs ladder and shortening", criterion7},
      {"sphere packing with list size (4096, 94)", criterion8},
      {"covering-size inequality over 500 seeded trials", criterion9},
      {"insdel metric axioms and half-Singleton ceilings", criterion10},
      {"locality classification and delta-2 agreement", criterion11},
      {"byte-identical verification across workers", criterion12},
  };
  int failures = 0;
  for (size_t i = 0; i < sizeof(table) / sizeof(table[0]); ++i) {
    bool ok = false;
    try {
      ok = table[i].fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  FAIL detail: unexpected error: %s\n", e.what());
    }
    std::printf("%s criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                table[i].what);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
