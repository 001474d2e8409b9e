#include <doctest.h>

#include <random>
#include <set>

#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/families.hpp"
#include "covbound/insdel.hpp"
#include "covbound/listdecode.hpp"
#include "covbound/lrc.hpp"
#include "helpers.hpp"

using namespace covbound;

// ---- list decoding ----------------------------------------------------------

TEST_CASE("list size scan on a perfect code") {
  auto ham = as_code(make_hamming(2, 3).code);
  CHECK(max_list_size(ham, 0).max_count == 1);
  // packing radius of a perfect code: balls are disjoint
  CHECK(max_list_size(ham, 1).max_count == 1);
  auto two = max_list_size(ham, 2);
  CHECK(two.max_count > 1);
  std::uint64_t prev = 1;
  for (int radius = 0; radius <= 7; ++radius) {
    auto pr = max_list_size(ham, radius);
    CHECK(pr.max_count >= prev);
    prev = pr.max_count;
  }
  CHECK(prev == ham.size());  // radius n swallows the whole code
  CHECK_THROWS_AS(max_list_size(ham, -1), ToolError);
  Code empty{field_make(2), 3, {}, false};
  CHECK_THROWS_AS(max_list_size(empty, 1), ToolError);
}

TEST_CASE("list witness center is itself a deepest ball") {
  auto c = testutil::random_packing(2, 7, 3, 11, 40);
  auto pr = max_list_size(c, 2);
  std::uint64_t at_witness = 0;
  for (const auto& w : c.words)
    if (hamming_distance(w, pr.witness_center) <= 2) ++at_witness;
  CHECK(at_witness == pr.max_count);
}

TEST_CASE("covering bound check on a perfect self-cover") {
  auto ham = as_code(make_hamming(2, 3).code);
  auto chk = verify_covering_bound(ham, ham, 1);
  CHECK(chk.holds);
  CHECK(chk.cover_radius == 1);
  CHECK(chk.list_size == 1);  // perfect: balls around codewords are disjoint
  CHECK(chk.code_size == 16);
  CHECK(!chk.counterexample.has_value());
  // census: every cover word sees exactly one codeword (itself)
  std::uint64_t total = 0;
  for (std::uint64_t count : chk.census) total += count;
  CHECK(total == chk.cover_size);
  REQUIRE(chk.census.size() >= 2);
  CHECK(chk.census[1] == 16);
}

TEST_CASE("covering bound check catches undersized radii") {
  auto ham = as_code(make_hamming(2, 3).code);
  CHECK_THROWS_AS(verify_covering_bound(ham, ham, 0), ToolError);
  Code other{field_make(2), 5, {{0, 0, 0, 0, 0}}, false};
  CHECK_THROWS_AS(verify_covering_bound(ham, other, 1), ToolError);
}

TEST_CASE("covering bound holds across random cover/code pairs") {
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 40; ++t) {
    int n = int(4 + rng() % 5);
    int radius = 1 + int(rng() % 2);
    auto cover = greedy_covering_search(2, n, radius, rng(), 1);
    auto code = testutil::random_packing(2, n, 2 * radius + 1, rng(), 50);
    if (code.size() == 0) continue;
    auto chk = verify_covering_bound(code, cover.code, radius);
    CHECK(chk.holds);
    CHECK(chk.code_size <= chk.list_size * chk.cover_size);
  }
}

// ---- insertion/deletion metric ----------------------------------------------

TEST_CASE("insdel distance on pinned pairs") {
  CHECK(insdel_distance({0, 1}, {1, 0}) == 2);
  CHECK(insdel_distance({0, 1, 0}, {0, 1, 0}) == 0);
  CHECK(insdel_distance({0, 0, 0}, {1, 1, 1}) == 6);
  CHECK(insdel_distance({1, 0, 1}, {0}) == 2);
  CHECK(insdel_distance({}, {1, 1}) == 2);
  CHECK(insdel_distance({0, 1, 2, 3}, {3, 2, 1, 0}) == 6);  // LCS = 1
}

TEST_CASE("insdel distance is a metric and bounded by twice Hamming") {
  std::mt19937_64 rng(606060);
  auto random_word = [&](int len, int q) {
    Word w(len);
    for (auto& x : w) x = Fel(rng() % q);
    return w;
  };
  for (int t = 0; t < 300; ++t) {
    int q = 2 + int(rng() % 3);
    Word a = random_word(int(1 + rng() % 9), q);
    Word b = random_word(int(1 + rng() % 9), q);
    Word c = random_word(int(1 + rng() % 9), q);
    int ab = insdel_distance(a, b);
    CHECK(ab == insdel_distance(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(ab <= insdel_distance(a, c) + insdel_distance(c, b));
  }
  for (int t = 0; t < 300; ++t) {
    int q = 2 + int(rng() % 3);
    int len = int(1 + rng() % 10);
    Word a = random_word(len, q);
    Word b = random_word(len, q);
    CHECK(insdel_distance(a, b) <= 2 * hamming_distance(a, b));
  }
}

TEST_CASE("code insdel distance and the structural checks") {
  auto rep = as_code(make_repetition(3, 3).code);  // {000, 111, 222} over GF(3)
  CHECK(code_insdel_distance(rep) == 6);

  auto report = insdel_report(rep);
  CHECK(report.insdel_dist == 6);
  CHECK(report.hamming_dist == 3);
  CHECK(report.k_eff == 1);
  CHECK(report.k_exact);
  CHECK(report.has_all_ones);
  bool saw_direct = false, saw_half = false, saw_improved = false,
       saw_twice = false;
  for (const auto& chk : report.checks) {
    if (chk.name == "direct_singleton") {
      saw_direct = true;
      CHECK(chk.applicable);
      CHECK(chk.limit == 6);  // 2 (n - k + 1)
      CHECK(chk.holds);
    } else if (chk.name == "half_singleton") {
      saw_half = true;
      CHECK(chk.applicable);
      CHECK(chk.limit == 6);  // 2 (n - 2k + 2)
      CHECK(chk.holds);
    } else if (chk.name == "improved_half_singleton") {
      saw_improved = true;
      CHECK(!chk.applicable);
      CHECK(chk.reason == "code contains the all-ones word");
    } else if (chk.name == "twice_hamming") {
      saw_twice = true;
      CHECK(chk.holds);
      CHECK(chk.limit == 6);
    }
  }
  CHECK(saw_direct);
  CHECK(saw_half);
  CHECK(saw_improved);
  CHECK(saw_twice);
}

TEST_CASE("half-singleton checks skip nonlinear codes") {
  Code c{field_make(2), 4, {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}}, false};
  auto report = insdel_report(c);
  CHECK(!report.k_exact);
  for (const auto& chk : report.checks)
    if (chk.name == "half_singleton" || chk.name == "improved_half_singleton") {
      CHECK(!chk.applicable);
      CHECK(chk.reason == "derived for linear codes only");
    }
}

TEST_CASE("improved half-singleton applies to linear codes without all-ones") {
  // [4,1] code generated by 1100: all-ones absent
  auto f = field_make(2);
  Matrix g(f, 1, 4);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  LinearCode lc{g};
  auto report = insdel_report(as_code(lc));
  CHECK(!report.has_all_ones);
  bool saw = false;
  for (const auto& chk : report.checks)
    if (chk.name == "improved_half_singleton") {
      saw = true;
      CHECK(chk.applicable);
      CHECK(chk.limit == 2 * (4 - 2 * 1 + 1));
      CHECK(chk.holds);
    }
  CHECK(saw);
}

TEST_CASE("every binary [4,1] code obeys the half-singleton ceiling") {
  auto f = field_make(2);
  for (int gen = 1; gen < 16; ++gen) {
    Matrix g(f, 1, 4);
    for (int i = 0; i < 4; ++i) g.at(0, i) = Fel((gen >> (3 - i)) & 1);
    auto c = as_code(LinearCode{g});
    CHECK(code_insdel_distance(c) <= 2 * (4 - 2 * 1 + 2));
  }
}

TEST_CASE("insdel size bounds carry the inferred-distance assumption") {
  // two-word code at insdel distance 10: Hamming distance >= 5 inferred
  auto f = field_make(2);
  Word zero(14, 0), block(14, 0);
  for (int i = 0; i < 5; ++i) block[size_t(i)] = 1;
  Code c{f, 14, {zero, block}, false};
  auto report = insdel_report(c);
  CHECK(report.insdel_dist == 10);
  REQUIRE(!report.size_bounds.empty());
  std::set<std::string> names;
  for (const auto& row : report.size_bounds) {
    names.insert(row.name);
    bool tagged = false;
    for (const auto& a : row.assumptions)
      tagged = tagged || a.find("insdel") != std::string::npos;
    CHECK(tagged);
  }
  CHECK(names.count("hamming_sum_family") == 1);
  auto& hs = *std::find_if(report.size_bounds.begin(), report.size_bounds.end(),
                           [](const BoundResult& r) {
                             return r.name == "hamming_sum_family";
                           });
  REQUIRE(hs.applicable);
  CHECK(*hs.value == 256);
}

// ---- locality ----------------------------------------------------------------

static LinearCode from_rows(int q, const std::vector<Word>& rows) {
  auto f = field_make(q);
  Matrix g(f, int(rows.size()), int(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      g.at(int(r), int(c)) = rows[r][c];
  return LinearCode{g};
}

TEST_CASE("locality profile of the replicated code") {
  auto c = from_rows(2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto prof = locality_profile(c);
  CHECK(prof.r == 1);
  CHECK(prof.complete);
  for (const auto& cert : prof.per_coordinate) {
    CHECK(cert.covered);
    CHECK(!cert.degenerate);
    CHECK(int(cert.support.size()) <= 2);
  }
  auto rep = classify_optimal(c);
  CHECK(rep.r == 1);
  CHECK(rep.d == 2);
  CHECK(rep.ceiling == 2);  // 4 - 2 + 2 - ceil(2/1)
  CHECK(rep.optimal);
  CHECK(rep.bound_name == "lrc_singleton_distance");
}

TEST_CASE("locality of the parity-check and MDS examples") {
  auto parity = from_rows(2, {{1, 0, 1}, {0, 1, 1}});
  auto prof = locality_profile(parity);
  CHECK(prof.r == 2);
  auto rep = classify_optimal(parity);
  CHECK(rep.d == 2);
  CHECK(rep.ceiling == 2);  // 3 - 2 + 2 - 1
  CHECK(rep.optimal);

  auto rs = make_reed_solomon(5, 4, 2);
  auto rs_rep = classify_optimal(rs.code);
  CHECK(rs_rep.r == 2);
  CHECK(rs_rep.d == 3);
  CHECK(rs_rep.optimal);  // MDS: r = k
}

TEST_CASE("identically-zero coordinates are reported, excluded and tolerated") {
  auto padded = from_rows(2, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}});
  auto prof = locality_profile(padded);
  CHECK(!prof.complete);
  CHECK(prof.r == 1);
  CHECK(prof.per_coordinate[4].degenerate);
  auto rep = classify_optimal(padded);
  CHECK(rep.r == 1);
  CHECK(rep.d == 2);
  CHECK(rep.ceiling == 3);  // 5 - 2 + 2 - 2
  CHECK(rep.defect == 1);
  CHECK(!rep.optimal);
}

TEST_CASE("an unchecked symbol makes classification inapplicable") {
  // e_3 is a codeword: no parity check touches coordinate 2
  auto c = from_rows(2, {{1, 1, 0}, {0, 0, 1}});
  auto prof = locality_profile(c);
  CHECK(!prof.complete);
  CHECK(!prof.per_coordinate[2].covered);
  CHECK_THROWS_AS(classify_optimal(c), ToolError);
}

TEST_CASE("r-delta verification accepts profile certificates at delta 2") {
  auto c = testutil::random_systematic_code(2, 8, 4, 95);
  auto prof = locality_profile(c);
  REQUIRE(prof.complete);
  std::vector<RecoveryCertificate> certs = prof.per_coordinate;
  auto verdict = verify_r_delta(c, prof.r, 2, certs);
  CHECK(verdict.ok);
  // one notch below the profile locality must fail
  if (prof.r >= 2) {
    auto tight = verify_r_delta(c, prof.r - 1, 2);
    CHECK(!tight.ok);
    CHECK(tight.failing_coordinate.has_value());
  }
}

TEST_CASE("r-delta verification rejects oversized certificates") {
  auto c = from_rows(2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  RecoveryCertificate big;
  big.coordinate = 0;
  big.support = {0, 1, 2, 3};
  std::vector<RecoveryCertificate> certs(4);
  for (int i = 0; i < 4; ++i) {
    certs[size_t(i)].coordinate = i;
    certs[size_t(i)].support = {0, 1, 2, 3};
  }
  auto verdict = verify_r_delta(c, 1, 2, certs);
  CHECK(!verdict.ok);
  CHECK(verdict.reason.find("cardinality") != std::string::npos);
}

TEST_CASE("replication cannot recover two erasures locally") {
  auto c = from_rows(2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto verdict = verify_r_delta(c, 1, 3);
  CHECK(!verdict.ok);
  CHECK(verdict.failing_coordinate.has_value());
}

TEST_CASE("ternary repetition achieves delta 3 at r 1") {
  auto c = from_rows(3, {{1, 1, 1}});
  auto verdict = verify_r_delta(c, 1, 3);
  CHECK(verdict.ok);
  auto rep = classify_optimal(c, 3);
  CHECK(rep.r == 1);
  CHECK(rep.d == 3);
  CHECK(rep.ceiling == 3);  // 3 - 1 + 1 - 0
  CHECK(rep.optimal);
  CHECK(rep.bound_name == "r_delta_singleton_distance");
}

TEST_CASE("delta-2 search agrees with the dual-support profile") {
  std::mt19937_64 rng(321321);
  int done = 0;
  while (done < 30) {
    int q = (rng() % 2) ? 2 : 3;
    int n = int(4 + rng() % 5);
    int k = int(2 + rng() % 3);
    if (k >= n) continue;
    auto c = testutil::random_systematic_code(q, n, k, rng());
    LocalityProfile prof;
    try {
      prof = locality_profile(c);
    } catch (const ToolError&) {
      continue;  // no usable parity checks at all
    }
    if (!prof.complete) continue;
    int searched = 0;
    for (int r = 1; r <= n; ++r)
      if (verify_r_delta(c, r, 2).ok) {
        searched = r;
        break;
      }
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(searched == prof.r);
    ++done;
  }
}

TEST_CASE("measured locality and distance never beat the ceiling") {
  std::mt19937_64 rng(777000);
  int done = 0;
  while (done < 25) {
    int q = (rng() % 2) ? 2 : 3;
    int n = int(4 + rng() % 5);
    int k = int(2 + rng() % 3);
    if (k >= n) continue;
    auto c = testutil::random_systematic_code(q, n, k, rng());
    OptimalityReport rep;
    try {
      rep = classify_optimal(c);
    } catch (const ToolError&) {
      continue;  // unchecked symbol
    }
    CHECK(rep.d <= rep.ceiling);
    CHECK(rep.defect == rep.ceiling - rep.d);
    CHECK(rep.optimal == (rep.defect == 0));
    ++done;
  }
}

TEST_CASE("lrc parameter bounds on pinned instances") {
  {  // distance ceilings
    LrcQuery query;
    query.n = 4;
    query.k = 2;
    query.r = 1;
    query.q = 2;
    auto rows = lrc_bounds(query);
    bool saw = false;
    for (const auto& row : rows)
      if (row.name == "lrc_singleton_distance") {
        saw = true;
        REQUIRE(row.applicable);
        CHECK(*row.value == 2);
      }
    CHECK(saw);
  }
  {  // r >= k reduces to plain Singleton
    LrcQuery query;
    query.n = 6;
    query.k = 2;
    query.r = 3;
    query.q = 2;
    auto rows = lrc_bounds(query);
    for (const auto& row : rows)
      if (row.name == "lrc_singleton_distance") {
        CHECK(*row.value == 5);
        bool tagged = false;
        for (const auto& a : row.assumptions)
          tagged = tagged || a.find("Singleton") != std::string::npos;
        CHECK(tagged);
      }
  }
  {  // length ceilings need R; the explicit form is R (q^4 - 1)/(q - 1)
    LrcQuery query;
    query.n = 10;
    query.k = 2;
    query.r = 1;
    query.q = 3;
    auto no_R = lrc_bounds(query);
    for (const auto& row : no_R)
      if (row.name.find("length") != std::string::npos)
        CHECK(!row.applicable);
    query.R = 2;
    auto rows = lrc_bounds(query);
    bool saw = false;
    for (const auto& row : rows)
      if (row.name == "optimal_lrc_length_hamming_sum") {
        saw = true;
        REQUIRE(row.applicable);
        CHECK(*row.value == 80);
      }
    CHECK(saw);
  }
  {  // asymptotic form needs the caller constant
    LrcQuery query;
    query.n = 10;
    query.k = 1;  // k <= R r keeps the length rows applicable
    query.r = 1;
    query.q = 3;
    query.R = 1;
    query.c = 2.0;
    auto rows = lrc_bounds(query);
    for (const auto& row : rows)
      if (row.name == "optimal_lrc_length_asymptotic") {
        REQUIRE(row.applicable);
        REQUIRE(row.value_real.has_value());
        CHECK(*row.value_real ==
              doctest::Approx(2.0 * std::pow(3.0, 3.0) * std::log(3.0)));
      }
  }
  LrcQuery bad;
  bad.n = 4;
  bad.k = 2;
  bad.r = 1;
  bad.q = 2;
  bad.delta = 1;
  CHECK_THROWS_AS(lrc_bounds(bad), ToolError);
}
