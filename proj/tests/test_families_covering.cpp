#include <doctest.h>
#include <omp.h>

#include <set>

#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/families.hpp"
#include "covbound/kernels.hpp"
#include "helpers.hpp"

using namespace covbound;

static FamilyCode build(const std::string& name,
                        std::map<std::string, int> params) {
  FamilySpec spec;
  spec.name = name;
  spec.params = std::move(params);
  return construct(spec);
}

TEST_CASE("family parameter table") {
  struct Row {
    const char* name;
    std::map<std::string, int> params;
    int n, k, d;
  };
  const Row rows[] = {
      {"hamming", {{"q", 2}, {"m", 3}}, 7, 4, 3},
      {"hamming", {{"q", 2}, {"m", 4}}, 15, 11, 3},
      {"hamming", {{"q", 3}, {"m", 2}}, 4, 2, 3},
      {"hamming", {{"q", 4}, {"m", 2}}, 5, 3, 3},
      {"simplex", {{"q", 2}, {"m", 3}}, 7, 3, 4},
      {"simplex", {{"q", 3}, {"m", 2}}, 4, 2, 3},
      {"golay_binary", {}, 23, 12, 7},
      {"golay_ternary", {}, 11, 6, 5},
      {"reed_solomon", {{"q", 7}, {"n", 7}, {"k", 3}}, 7, 3, 5},
      {"reed_solomon", {{"q", 5}, {"n", 4}, {"k", 2}}, 4, 2, 3},
      {"reed_muller1", {{"m", 4}}, 16, 5, 8},
      {"reed_muller1", {{"m", 3}}, 8, 4, 4},
      {"kasami", {{"m", 2}}, 15, 6, 6},
      {"repetition", {{"q", 2}, {"n", 5}}, 5, 1, 5},
      {"repetition", {{"q", 3}, {"n", 4}}, 4, 1, 4},
      {"block_diagonal", {{"q", 2}, {"m", 3}, {"u", 2}}, 14, 8, 3},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    FamilyCode fc = build(r.name, r.params);
    CHECK(fc.code.n() == r.n);
    CHECK(fc.code.k() == r.k);
    CHECK(fc.advertised_d == r.d);
    CHECK(min_distance(fc.code) == r.d);
  }
}

TEST_CASE("construct validates requests") {
  CHECK_THROWS_AS(build("hamming", {{"q", 6}, {"m", 2}}), ToolError);
  CHECK_THROWS_AS(build("hamming", {{"q", 2}}), ToolError);  // missing m
  CHECK_THROWS_AS(build("reed_solomon", {{"q", 5}, {"n", 7}, {"k", 2}}),
                  ToolError);  // n > q
  CHECK_THROWS_AS(build("reed_solomon", {{"q", 7}, {"n", 5}, {"k", 6}}),
                  ToolError);  // k > n
  CHECK_THROWS_AS(build("no_such_family", {}), ToolError);
  CHECK_THROWS_AS(build("reed_muller1", {{"m", 0}}), ToolError);
  // duplicate evaluation points rejected
  FamilySpec spec;
  spec.name = "reed_solomon";
  spec.params = {{"q", 5}, {"n", 3}, {"k", 2}};
  spec.rs_points = std::vector<int>{0, 0, 1};
  CHECK_THROWS_AS(construct(spec), ToolError);
}

TEST_CASE("projective columns are normalized and distinct") {
  for (int q : {2, 3, 4}) {
    auto f = field_make(q);
    Matrix m = projective_columns(f, 3);
    int expect = (int(pow_u64(q, 3)) - 1) / (q - 1);
    CHECK(m.cols == expect);
    std::set<std::vector<Fel>> cols;
    for (int c = 0; c < m.cols; ++c) {
      std::vector<Fel> col(m.rows);
      int first = -1;
      for (int r = 0; r < m.rows; ++r) {
        col[r] = m.at(r, c);
        if (first < 0 && col[r] != 0) first = r;
      }
      REQUIRE(first >= 0);
      CHECK(m.at(first, c) == 1);
      cols.insert(col);
    }
    CHECK(int(cols.size()) == expect);
  }
}

TEST_CASE("simplex is constant weight q^(m-1)") {
  for (int q : {2, 3}) {
    FamilyCode fc = build("simplex", {{"q", q}, {"m", 3}});
    auto wd = weight_distribution(fc.code);
    std::uint64_t qm1 = pow_u64(q, 2);
    for (int w = 1; w < int(wd.size()); ++w) {
      if (w == int(qm1))
        CHECK(wd[w] == pow_u64(q, 3) - 1);
      else
        CHECK(wd[w] == 0);
    }
  }
}

TEST_CASE("kasami m=2 and m=3 weight sets") {
  FamilyCode k2 = build("kasami", {{"m", 2}});
  auto wd = weight_distribution(k2.code);
  std::set<int> nz;
  for (int w = 1; w < int(wd.size()); ++w)
    if (wd[w] > 0) nz.insert(w);
  CHECK(nz == std::set<int>{6, 8, 10});

  FamilyCode k3 = build("kasami", {{"m", 3}});
  CHECK(k3.code.n() == 63);
  CHECK(k3.code.k() == 9);
  auto wd3 = weight_distribution(k3.code);
  std::set<int> nz3;
  for (int w = 1; w < int(wd3.size()); ++w)
    if (wd3[w] > 0) nz3.insert(w);
  // 2^(2m-1) and 2^(2m-1) +- 2^(m-1)
  CHECK(nz3 == std::set<int>{28, 32, 36});
}

TEST_CASE("perfect codes have coset-leader radius e") {
  CHECK(covering_radius(make_hamming(2, 3).code, RadiusMethod::coset_leader)
            .radius == 1);
  CHECK(covering_radius(make_hamming(3, 2).code, RadiusMethod::coset_leader)
            .radius == 1);
  CHECK(covering_radius(make_golay_ternary().code, RadiusMethod::coset_leader)
            .radius == 2);
}

TEST_CASE("coset-leader radius equals exhaustive radius on random codes") {
  std::mt19937_64 rng(2718);
  int done = 0;
  while (done < 60) {
    int q = int(2 + rng() % 3);  // 2..4
    if (q == 4 && rng() % 2) q = 2;
    int n = int(3 + rng() % 6);
    if (pow_u64(q, n) > 4096) continue;
    int k = int(1 + rng() % std::min<std::uint64_t>(n - 1, 5));
    auto c = testutil::random_systematic_code(q, n, k, rng());
    auto ex = covering_radius(c, RadiusMethod::exhaustive);
    auto cl = covering_radius(c, RadiusMethod::coset_leader);
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(ex.radius == cl.radius);
    CHECK(ex.exact);
    CHECK(cl.exact);
    // both witnesses are genuine deep holes
    auto words = materialize(c);
    for (const Word* w : {&ex.witness, &cl.witness}) {
      int best = n + 1;
      for (const auto& cw : words)
        best = std::min(best, hamming_distance(*w, cw));
      CHECK(best == ex.radius);
    }
    ++done;
  }
}

TEST_CASE("external distance upper-bounds the exact radius") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 25; ++t) {
    int q = (t % 2) ? 3 : 2;
    int n = int(4 + rng() % 5);
    int k = int(1 + rng() % (n - 2));
    auto c = testutil::random_systematic_code(q, n, k, rng());
    int ed = external_distance(c);
    auto ex = covering_radius(c, RadiusMethod::exhaustive);
    CHECK(ed >= ex.radius);
  }
}

TEST_CASE("product extension preserves the covering radius") {
  auto c = testutil::random_systematic_code(2, 6, 3, 555);
  int base = covering_radius(c, RadiusMethod::exhaustive).radius;
  for (int s : {1, 2}) {
    LinearCode e = extend_product(c, s);
    CHECK(covering_radius(e, RadiusMethod::exhaustive).radius == base);
  }
  Code ce = extend_product(as_code(c), 1);
  CHECK(covering_radius(ce, RadiusMethod::exhaustive).radius == base);
}

TEST_CASE("sampled lower estimate never exceeds the exact radius") {
  auto c = testutil::random_systematic_code(2, 8, 4, 808);
  auto lo = covering_radius(c, RadiusMethod::sample_lower, 7, 512);
  auto ex = covering_radius(c, RadiusMethod::exhaustive);
  CHECK(!lo.exact);
  CHECK(lo.radius <= ex.radius);
}

TEST_CASE("coset-leader method rejects explicit codes") {
  Code e = testutil::random_packing(2, 5, 1, 4);
  CHECK_THROWS_AS(covering_radius(e, RadiusMethod::coset_leader), ToolError);
  Code empty{field_make(2), 3, {}, false};
  CHECK_THROWS_AS(covering_radius(empty), ToolError);
}

TEST_CASE("greedy covering search returns verified covers") {
  for (int n : {3, 4, 5, 6}) {
    auto res = greedy_covering_search(2, n, 1, 17, 2);
    CHECK(res.radius <= 1);
    // sphere-covering floor
    std::uint64_t space = pow_u64(2, n);
    std::uint64_t ball = 1 + n;
    CHECK(res.code.size() * ball >= space);
    auto verify = covering_radius(res.code, RadiusMethod::exhaustive);
    CHECK(verify.radius == res.radius);
  }
  // hamming-like instance: greedy at n=3 R=1 should find size 2
  auto r3 = greedy_covering_search(2, 3, 1, 1, 4);
  CHECK(r3.code.size() == 2);
}

TEST_CASE("greedy covering search is deterministic per seed") {
  auto a = greedy_covering_search(3, 3, 1, 99, 3);
  auto b = greedy_covering_search(3, 3, 1, 99, 3);
  CHECK(a.code.words == b.code.words);
  CHECK(a.best_restart == b.best_restart);
}

TEST_CASE("parallel kernels match the serial reference at various widths") {
  auto c = testutil::random_systematic_code(2, 10, 5, 606);
  auto words = materialize(c);
  auto pc = pack_words(words, 2, 10);
  auto golay = make_golay_binary();
  int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    auto r1 = kernels::radius_scan(pc);
    auto r2 = reference::radius_scan(pc);
    CHECK(r1.radius == r2.radius);
    CHECK(r1.witness_index == r2.witness_index);
    auto l1 = kernels::list_scan(pc, 3);
    auto l2 = reference::list_scan(pc, 3);
    CHECK(l1.max_count == l2.max_count);
    CHECK(l1.witness_index == l2.witness_index);
    CHECK(kernels::pairwise_min_distance(pc) ==
          reference::pairwise_min_distance(pc));
    CHECK(kernels::weight_histogram(c) == reference::weight_histogram(c));
    CHECK(kernels::coset_leader_weights(golay.code.parity_check()) ==
          reference::coset_leader_weights(golay.code.parity_check()));
  }
  omp_set_num_threads(saved);
}
