#include "covbound/listdecode.hpp"

#include <algorithm>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"
#include "covbound/kernels.hpp"

namespace covbound {

namespace {
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}
}  // namespace

ListProfile max_list_size(const Code& c, int radius) {
  if (c.words.empty()) fail(Errc::trivial_code, "empty code has no lists");
  if (radius < 0) fail(Errc::bad_params, "negative radius");
  const std::uint64_t space = pow_u64(c.f->q(), c.n);
  check_budget(sat_mul(space, c.words.size()), "list-size scan");
  PackedCode pc = pack_words(c.words, c.f->q(), c.n);
  auto scan = kernels::list_scan(pc, radius);
  ListProfile out;
  out.radius = radius;
  out.max_count = scan.max_count;
  out.witness_center = index_to_word(scan.witness_index, c.f->q(), c.n);
  return out;
}

CoveringBoundCheck verify_covering_bound(const Code& c, const Code& cover,
                                         int radius) {
  if (c.f->q() != cover.f->q() || c.n != cover.n)
    fail(Errc::length_mismatch, "code and cover live in different spaces");
  RadiusResult rr = covering_radius(cover, RadiusMethod::auto_pick);
  if (rr.radius > radius)
    fail(Errc::radius_too_large,
         "cover radius " + std::to_string(rr.radius) + " exceeds requested " +
             std::to_string(radius));

  CoveringBoundCheck out;
  out.cover_radius = rr.radius;
  out.code_size = c.words.size();
  out.cover_size = cover.words.size();
  out.profile = max_list_size(c, radius);
  out.list_size = out.profile.max_count;
  out.holds = out.code_size <= out.list_size * out.cover_size;

  // Census: for each cover word, count codewords within `radius` of it.
  check_budget(sat_mul(cover.words.size(), c.words.size()), "covering census");
  const std::int64_t m = static_cast<std::int64_t>(cover.words.size());
  std::vector<std::uint64_t> counts(cover.words.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    std::uint64_t cnt = 0;
    for (const Word& w : c.words)
      if (hamming_distance(cover.words[i], w) <= radius) ++cnt;
    counts[i] = cnt;
  }
  out.census.assign(out.list_size + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::uint64_t cnt = counts[i];
    if (cnt > out.list_size) {
      // A ball holding more codewords than the measured maximum list size
      // means one of the scans is wrong; surface the offending center.
      out.holds = false;
      if (!out.counterexample) out.counterexample = cover.words[i];
      out.census.resize(cnt + 1, 0);
    }
    out.census[cnt] += 1;
  }
  return out;
}

}  // namespace covbound
