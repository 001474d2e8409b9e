#include "covbound/insdel.hpp"

#include <algorithm>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"

namespace covbound {

namespace {
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}
}  // namespace

int insdel_distance(const Word& a, const Word& b) {
  const int la = static_cast<int>(a.size());
  const int lb = static_cast<int>(b.size());
  // LCS by dynamic programming, one row at a time.
  std::vector<int> prev(lb + 1, 0), cur(lb + 1, 0);
  for (int i = 1; i <= la; ++i) {
    for (int j = 1; j <= lb; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return la + lb - 2 * prev[lb];
}

int code_insdel_distance(const Code& c) {
  const std::uint64_t m = c.words.size();
  if (m < 2) fail(Errc::trivial_code, "need at least two codewords");
  const std::uint64_t nn = static_cast<std::uint64_t>(c.n) * c.n;
  check_budget(sat_mul(sat_mul(m, m), nn), "pairwise insdel scan");
  const std::int64_t mm = static_cast<std::int64_t>(m);
  int best = 2 * c.n + 1;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t i = 0; i < mm; ++i)
    for (std::int64_t j = i + 1; j < mm; ++j)
      best = std::min(best, insdel_distance(c.words[i], c.words[j]));
  return best;
}

namespace {

InsdelCheck make_check(const std::string& name, const std::string& citation,
                       int limit, int measured) {
  InsdelCheck chk;
  chk.name = name;
  chk.citation = citation;
  chk.limit = limit;
  chk.holds = measured <= limit;
  return chk;
}

InsdelCheck skip_check(const std::string& name, const std::string& citation,
                       const std::string& reason) {
  InsdelCheck chk;
  chk.name = name;
  chk.citation = citation;
  chk.applicable = false;
  chk.reason = reason;
  return chk;
}

}  // namespace

InsdelReport insdel_report(const Code& c) {
  if (c.words.size() < 2) fail(Errc::trivial_code, "need at least two codewords");
  InsdelReport rep;
  rep.n = c.n;
  rep.size = c.words.size();

  const int q = c.f->q();
  std::uint64_t power = 1;
  rep.k_eff = 0;
  while (power * q <= rep.size) {
    power *= q;
    ++rep.k_eff;
  }
  rep.k_exact = (power == rep.size);

  rep.insdel_dist = code_insdel_distance(c);
  rep.hamming_dist = min_distance(c);
  const Word all_ones(c.n, Fel{1});
  rep.has_all_ones =
      std::find(c.words.begin(), c.words.end(), all_ones) != c.words.end();

  const int k = rep.k_eff;
  const int d = rep.insdel_dist;
  {
    InsdelCheck chk =
        make_check("direct_singleton", "Sec. 6", 2 * (c.n - k + 1), d);
    if (!rep.k_exact)
      chk.reason = "dimension floored to log_q |C|; bound uses |C| >= q^k";
    rep.checks.push_back(chk);
  }
  if (!c.linear_hint) {
    rep.checks.push_back(skip_check("half_singleton", "Sec. 6",
                                    "derived for linear codes only"));
  } else {
    rep.checks.push_back(
        make_check("half_singleton", "Sec. 6", 2 * (c.n - 2 * k + 2), d));
  }
  if (!c.linear_hint) {
    rep.checks.push_back(skip_check("improved_half_singleton", "Sec. 6",
                                    "derived for linear codes only"));
  } else if (rep.has_all_ones) {
    rep.checks.push_back(skip_check("improved_half_singleton", "Sec. 6",
                                    "code contains the all-ones word"));
  } else {
    rep.checks.push_back(make_check("improved_half_singleton", "Sec. 6",
                                    2 * (c.n - 2 * k + 1), d));
  }
  rep.checks.push_back(
      make_check("twice_hamming", "Sec. 6", 2 * rep.hamming_dist, d));

  // Size bounds through the Hamming-side machinery at the inferred distance.
  CodeParams p;
  p.q = q;
  p.n = c.n;
  p.d = (d + 1) / 2;
  p.L = 1;
  p.linear = c.linear_hint;
  static const char* kFamilies[] = {
      "odd_radius_binary_family", "redundancy_from_length_table",
      "even_radius_prime_family", "hamming_sum_family"};
  for (BoundResult& row : family_construction_bounds(p)) {
    bool keep = false;
    for (const char* name : kFamilies)
      if (row.name == name) keep = true;
    if (!keep) continue;
    row.assumptions.push_back(
        "Hamming distance inferred from insdel distance: d >= ceil(insdel/2)");
    rep.size_bounds.push_back(std::move(row));
  }
  return rep;
}

}  // namespace covbound
