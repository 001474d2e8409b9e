#include <doctest.h>

#include <set>

#include "covbound/bounds.hpp"
#include "covbound/claims.hpp"
#include "covbound/config.hpp"
#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/oracle.hpp"
#include "helpers.hpp"

using namespace covbound;

TEST_CASE("exact packing numbers at distance 3") {
  CHECK(exact_A(2, 3, 3).value == 2);
  CHECK(exact_A(2, 4, 3).value == 2);
  auto a5 = exact_A(2, 5, 3).value;
  CHECK(a5 == 4);
  CHECK(exact_A(2, 5, 5).value == 2);
  CHECK(exact_A(2, 4, 4).value == 2);
  CHECK(exact_A(3, 3, 3).value == 3);  // ternary repetition
}

TEST_CASE("exact packing degenerate shapes") {
  auto whole = exact_A(3, 2, 1);
  CHECK(whole.value == 9);
  CHECK(whole.witness.size() == 9);
  CHECK(exact_A(2, 4, 5).value == 1);  // d > n: single word
  CHECK_THROWS_AS(exact_A(2, 4, 0), ToolError);
}

TEST_CASE("packing witnesses honor the distance they claim") {
  for (int n = 3; n <= 6; ++n) {
    auto res = exact_A(2, n, 3);
    CHECK(res.witness.size() == res.value);
    if (res.witness.size() >= 2) CHECK(min_distance(res.witness) >= 3);
  }
}

TEST_CASE("exact covering numbers") {
  auto k31 = exact_K(2, 3, 1);
  CHECK(k31.value == 2);
  std::set<Word> expect = {{0, 0, 0}, {1, 1, 1}};
  std::set<Word> got(k31.witness.words.begin(), k31.witness.words.end());
  CHECK(got == expect);

  CHECK(exact_K(2, 4, 1).value == 4);
  CHECK(exact_K(2, 5, 1).value == 7);
  CHECK(exact_K(3, 3, 1).value == 5);
  CHECK(exact_K(2, 5, 5).value == 1);
  CHECK(exact_K(2, 6, 2).value == 4);
  CHECK_THROWS_AS(exact_K(2, 4, -1), ToolError);
}

TEST_CASE("covering witnesses honor the radius they claim") {
  for (int n = 3; n <= 6; ++n) {
    auto res = exact_K(2, n, 1);
    CHECK(res.witness.size() == res.value);
    auto verify = covering_radius(res.witness, RadiusMethod::exhaustive);
    CHECK(verify.radius <= 1);
  }
}

TEST_CASE("oracle cap rejects spaces beyond the configured size") {
  std::uint64_t saved = oracle_cap();
  set_oracle_cap(729);
  CHECK_THROWS_AS(exact_A(2, 10, 3), ToolError);
  CHECK_THROWS_AS(exact_K(3, 7, 1), ToolError);
  set_oracle_cap(64);
  CHECK_THROWS_AS(exact_A(2, 7, 3), ToolError);
  CHECK(exact_A(2, 6, 3).value == 8);
  set_oracle_cap(saved);
}

TEST_CASE("halving the length at most halves the packing number") {
  for (int n = 3; n <= 6; ++n)
    for (int d = 2; d <= 3; ++d) {
      auto big = exact_A(2, n, d).value;
      auto small = exact_A(2, n - 1, d).value;
      CHECK(big <= 2 * small);
    }
}

TEST_CASE("every applicable ladder bound dominates the exact count") {
  for (int q : {2, 3})
    for (int n = 3; n <= (q == 2 ? 6 : 4); ++n)
      for (int d = 2; d <= n; ++d) {
        std::uint64_t exact = exact_A(q, n, d).value;
        CodeParams p;
        p.q = q;
        p.n = n;
        p.d = d;
        LadderResult lad;
        try {
          lad = bound_ladder(p);
        } catch (const ToolError&) {
          continue;
        }
        for (const auto& row : lad.rows) {
          if (!row.applicable || !row.value || !row.counts_for_tightest)
            continue;
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(row.name);
          CHECK(*row.value >= long(exact));
        }
      }
}

TEST_CASE("claim registry ids are unique and non-empty") {
  auto ids = claim_ids();
  CHECK(ids.size() >= 40);
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
}

TEST_CASE("single-claim runs work and unknown ids are rejected") {
  auto one = run_claims("golay-23-12-radius");
  REQUIRE(one.size() == 1);
  CHECK(one[0].pass);
  CHECK(one[0].expected == "3");
  CHECK(one[0].computed == "3");
  CHECK_THROWS_AS(run_claims("no-such-claim"), ToolError);
}

TEST_CASE("the full claim registry passes") {
  auto results = run_claims();
  CHECK(results.size() == claim_ids().size());
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.expected);
    CAPTURE(r.computed);
    CHECK(r.pass);
  }
}
