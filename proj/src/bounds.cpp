#include "covbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "covbound/errors.hpp"
#include "covbound/field.hpp"

namespace covbound {

namespace {

mpz_class zpow(int q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), unsigned(q), unsigned(e));
  return r;
}

// L * q^e, floor-divided when e < 0 (the bound stays a valid ceiling).
mpz_class scaled_power(long L, int q, long e) {
  if (e >= 0) return mpz_class(L) * zpow(q, e);
  mpz_class r = mpz_class(L) / zpow(q, -e);
  return r;
}

mpz_class ball_volume(int q, int n, int radius) {
  mpz_class ball = 0, binom = 1, qm1 = 1;
  for (int j = 0; j <= std::min(radius, n); ++j) {
    ball += binom * qm1;
    binom = binom * (n - j) / (j + 1);
    qm1 *= (q - 1);
  }
  return ball;
}

BoundResult inapplicable(std::string name, std::string citation, std::string why) {
  BoundResult r;
  r.name = std::move(name);
  r.citation = std::move(citation);
  r.applicable = false;
  r.reason = std::move(why);
  return r;
}

bool is_prime_power(int q) {
  try {
    factor_prime_power(q);
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

int CodeParams::list_radius() const {
  if (d_list) return *d_list;
  if (d) return (*d - 1) / 2;
  fail(Errc::missing_param, "need d or d_list");
}

std::optional<int> CodeParams::distance_or_derived() const {
  if (d) return d;
  if (d_list && L == 1) return 2 * *d_list + 1;
  return std::nullopt;
}

BoundResult singleton_bound(const CodeParams& p) {
  auto d = p.distance_or_derived();
  if (!d)
    return inapplicable("singleton", "Sec. 1",
                        "needs a minimum distance (not implied by d_list when L > 1)");
  BoundResult r;
  r.name = "singleton";
  r.citation = "Sec. 1";
  r.closed_form = "q^(n-d+1)";
  r.value = zpow(p.q, p.n - *d + 1);
  if (!p.d)
    r.assumptions.push_back("distance taken as 2*d_list+1 from unique decoding");
  return r;
}

BoundResult generalized_singleton_ST(const CodeParams& p) {
  int dl = p.list_radius();
  BoundResult r;
  r.name = "generalized_singleton";
  r.citation = "Sec. 1";
  r.closed_form = "L * q^(n - floor((L+1) d_list / L))";
  mpz_class drop = (mpz_class(p.L) + 1) * dl / p.L;
  r.value = scaled_power(p.L, p.q, p.n - drop.get_si());
  return r;
}

BoundResult redundancy_list_bound(const CodeParams& p) {
  int dl = p.list_radius();
  BoundResult r;
  r.name = "redundancy_list";
  r.citation = "Cor 2.1";
  r.closed_form = "L * q^(n - d_list)";
  r.value = scaled_power(p.L, p.q, p.n - dl);
  return r;
}

BoundResult sphere_packing_list(const CodeParams& p) {
  int dl = p.list_radius();
  BoundResult r;
  r.name = "sphere_packing_list";
  r.citation = "Sec. 2";
  r.closed_form = "floor(L * q^n / V_q(n, d_list))";
  r.value = mpz_class(p.L) * zpow(p.q, p.n) / ball_volume(p.q, p.n, dl);
  return r;
}

int griesmer_max_k(int q, int n, int d) {
  if (d < 1 || d > n) fail(Errc::bad_params, "griesmer needs 1 <= d <= n");
  long sum = 0;
  mpz_class qi = 1;
  int k = 0;
  while (true) {
    mpz_class term = (mpz_class(d) + qi - 1) / qi;  // ceil(d / q^i)
    sum += term.get_si();
    if (sum > n) break;
    ++k;
    qi *= q;
  }
  return k;
}

BoundResult griesmer_bound(const CodeParams& p) {
  auto d = p.distance_or_derived();
  if (!d) return inapplicable("griesmer", "Sec. 1", "needs a minimum distance");
  if (!p.linear)
    return inapplicable("griesmer", "Sec. 1", "holds for linear codes only");
  BoundResult r;
  r.name = "griesmer";
  r.citation = "Sec. 1";
  r.closed_form = "q^max{k : sum ceil(d/q^i) <= n}";
  r.value = zpow(p.q, griesmer_max_k(p.q, p.n, *d));
  r.assumptions.push_back("linear codes only");
  return r;
}

BoundResult bush_bound(int q) {
  if (q % 2 == 0) fail(Errc::q_even, "bush bound needs odd q");
  BoundResult r;
  r.name = "bush";
  r.citation = "Sec. 1";
  r.closed_form = "q^3 - 2";
  r.value = mpz_class(q) * q * q - 2;
  r.assumptions.push_back("parameters fixed at n = q+2, d = q");
  return r;
}

BoundResult covering_code_bound(const VerifiedCover& cover, int n, int d_list,
                                long L) {
  // Shorter covers must be extended (size scaled by q per coordinate) before
  // this call; the other overloads and the ladder do so.
  if (cover.n != n)
    fail(Errc::length_mismatch, "cover length differs from the bounded length");
  if (cover.radius > d_list)
    fail(Errc::radius_too_large, "cover radius exceeds the list radius");
  BoundResult r;
  r.name = "covering_code";
  r.citation = "Thm 2.1";
  r.closed_form = "L * |C'|";
  r.value = mpz_class(L) * cover.size;
  if (!cover.provenance.empty()) r.assumptions.push_back(cover.provenance);
  if (!cover.exact)
    r.assumptions.push_back("cover radius known only as an upper bound (sound)");
  return r;
}

BoundResult covering_code_bound(const Code& cover, const RadiusResult& radius, int n,
                                int d_list, long L) {
  if (!radius.exact)
    fail(Errc::radius_not_verified, "sampled radius estimates cannot back a bound");
  VerifiedCover v{mpz_class(long(cover.words.size())), cover.n, radius.radius, true,
                  "live covering code (" + radius.method + ")"};
  int q = cover.f->q();
  if (v.n < n) v.size *= zpow(q, n - v.n);
  v.n = n;
  return covering_code_bound(v, n, d_list, L);
}

BoundResult covering_code_bound(const tables::TableEntry& entry, int n, int d_list,
                                long L) {
  if (entry.kind != "K" || !entry.value)
    fail(Errc::bad_params, "covering bound needs a K-type table entry");
  VerifiedCover v{*entry.value, entry.a, entry.b, true,
                  entry.citation + (entry.note.empty() ? "" : ": " + entry.note)};
  if (v.n < n) v.size *= zpow(entry.q, n - v.n);
  v.n = n;
  return covering_code_bound(v, n, d_list, L);
}

mpz_class list_size_lower_bound(int q, int k, int n, const mpz_class& cover_size) {
  mpz_class space = zpow(q, n);
  bool perfect = false;
  for (int radius = 0; radius <= n; ++radius)
    if (cover_size * ball_volume(q, n, radius) == space) {
      perfect = true;
      break;
    }
  if (!perfect)
    fail(Errc::not_perfect, "cover size fails the perfect-code identity");
  mpz_class num = zpow(q, k);
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), cover_size.get_mpz_t());
  return r;
}

CyclotomicDerived cyclotomic_derive(int q, const CyclotomicParams& aux) {
  if (!is_prime_power(q)) fail(Errc::not_prime_power, "q must be a prime power");
  if (aux.m < 1) fail(Errc::bad_params, "cyclotomic aux needs m >= 1");
  if (aux.e < 2) fail(Errc::bad_params, "cyclotomic aux needs e >= 2");
  if (aux.a < 1) fail(Errc::bad_params, "cyclotomic aux needs a >= 1");
  if (aux.e > 1'000'000) fail(Errc::bad_params, "e too large");
  if (long(aux.deltas.size()) != aux.e)
    fail(Errc::bad_params, "need exactly e deltas");
  mpz_class big = zpow(q, aux.m) - 1;
  if (big % aux.e != 0) fail(Errc::bad_params, "e must divide q^m - 1");
  if (mpz_class(aux.a) % big == 0)
    fail(Errc::bad_params, "q^m - 1 must not divide a");
  std::vector<long> residues;
  for (long dlt : aux.deltas) {
    long rsd = ((dlt % aux.e) + aux.e) % aux.e;
    if (std::find(residues.begin(), residues.end(), rsd) != residues.end())
      fail(Errc::bad_params, "deltas must be pairwise distinct mod e");
    residues.push_back(rsd);
  }
  mpz_class g = aux.e;
  for (size_t i = 1; i < aux.deltas.size(); ++i) {
    mpz_class diff = aux.deltas[i] - aux.deltas[0];
    g = gcd(g, abs(diff));
  }
  if (g != 1)
    fail(Errc::bad_params, "delta differences must be coprime with e");

  CyclotomicDerived out;
  mpz_class step = big / aux.e;
  out.delta = big;
  for (long dlt : aux.deltas) out.delta = gcd(out.delta, mpz_class(aux.a) + step * dlt);
  out.n1 = big / out.delta;
  out.N = gcd(big / (q - 1), mpz_class(aux.a) * aux.e);
  return out;
}

BoundResult cyclotomic_family_bound(const CodeParams& p, const CyclotomicParams& aux) {
  const char* cite = "Bound IV";
  const char* name = "cyclotomic_family";
  int e = p.list_radius();
  if (aux.e != e)
    return inapplicable(name, cite, "aux parameters target radius e = " +
                                        std::to_string(aux.e) + ", queried " +
                                        std::to_string(e));
  CyclotomicDerived d = cyclotomic_derive(p.q, aux);
  if (d.N != 1) return inapplicable(name, cite, "N != 1");
  if (mpz_class(p.n) < d.n1)
    return inapplicable(name, cite, "length below n1 = " + d.n1.get_str());
  BoundResult r;
  r.name = name;
  r.citation = cite;
  r.closed_form = "L * q^(n - e m)";
  r.value = scaled_power(p.L, p.q, p.n - long(e) * aux.m);
  r.assumptions.push_back("cyclotomic parameters supplied by caller");
  return r;
}

BoundResult cyclotomic_family_bound(const CodeParams& p) {
  (void)p.list_radius();
  fail(Errc::missing_aux, "cyclotomic bound needs auxiliary parameters");
}

std::vector<BoundResult> family_construction_bounds(
    const CodeParams& p, const std::optional<CyclotomicParams>& aux,
    std::optional<double> c) {
  const int q = p.q, n = p.n;
  const int radius = p.list_radius();
  std::vector<BoundResult> out;

  {  // redundancy from the embedded length-function table
    const char* name = "redundancy_from_length_table";
    const char* cite = "Bound II";
    auto hit = tables::best_redundancy(q, radius, n);
    if (!hit) {
      out.push_back(inapplicable(name, cite,
                                 "no stored length-function value l_q(r,R) <= n"));
    } else {
      BoundResult r;
      r.name = name;
      r.citation = cite;
      r.closed_form = "L * q^(n - r), r = " + std::to_string(hit->r);
      r.value = scaled_power(p.L, q, n - hit->r);
      r.assumptions.push_back("length-function entry " + hit->entry.citation +
                              (hit->entry.note.empty() ? "" : " (" + hit->entry.note + ")"));
      out.push_back(std::move(r));
    }
  }

  {  // binary family at odd list radius
    const char* name = "odd_radius_binary_family";
    const char* cite = "Cor 4.1";
    if (q != 2) {
      out.push_back(inapplicable(name, cite, "binary codes only"));
    } else if (radius % 2 == 0) {
      out.push_back(inapplicable(name, cite, "needs an odd list radius"));
    } else {
      int m = 0;
      while (m + 1 < 16 && (std::int64_t(1) << (2 * (m + 1))) - 1 <= n) ++m;
      if (m == 0) {
        out.push_back(inapplicable(name, cite, "length below 2^2 - 1 threshold"));
      } else if (radius > 2 * ((1 << m) + 1) + 1) {
        out.push_back(inapplicable(name, cite, "list radius exceeds 2(2^m+1)+1"));
      } else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "L * 2^(n - R m), m = " + std::to_string(m);
        r.value = scaled_power(p.L, 2, n - long(radius) * m);
        out.push_back(std::move(r));
      }
    }
  }

  {  // asymptotic family with caller constant
    const char* name = "asymptotic_length_family";
    const char* cite = "Cor 4.2";
    if (!c) {
      out.push_back(inapplicable(name, cite, "needs caller constant c"));
    } else if (radius < 3) {
      out.push_back(inapplicable(name, cite, "needs list radius >= 3"));
    } else {
      long best_t = 0;
      for (long t = 1; t < 1000; ++t) {
        double threshold = *c * std::pow(double(q), (double(t - 1) * radius + 1) /
                                                        radius) *
                           std::pow(std::log(double(q)), 1.0 / radius);
        if (threshold <= double(n))
          best_t = t;
        else
          break;
      }
      if (best_t == 0) {
        out.push_back(inapplicable(name, cite, "length below the t = 1 threshold"));
      } else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "L * q^(n - t R - 1), t = " + std::to_string(best_t);
        r.value = scaled_power(p.L, q, n - best_t * radius - 1);
        r.assumptions.push_back("constant c supplied by caller");
        out.push_back(std::move(r));
      }
    }
  }

  {  // odd-prime-field family at even list radius
    const char* name = "even_radius_prime_family";
    const char* cite = "Bound III";
    auto pm = [&]() -> std::optional<std::pair<int, int>> {
      try {
        return factor_prime_power(q);
      } catch (...) {
        return std::nullopt;
      }
    }();
    if (!pm || pm->second != 1 || q == 2) {
      out.push_back(inapplicable(name, cite, "needs an odd prime field"));
    } else if (radius % 2 != 0 || radius == 0) {
      out.push_back(inapplicable(name, cite, "needs a positive even list radius"));
    } else {
      int m = 0;
      while (true) {
        mpz_class next = zpow(q, 2 * (m + 1)) - 1;
        if (next > n) break;
        ++m;
      }
      if (m == 0) {
        out.push_back(inapplicable(name, cite, "length below q^2 - 1"));
      } else if (mpz_class(radius) > 2 * (zpow(q, m) + 1)) {
        out.push_back(inapplicable(name, cite, "list radius exceeds 2(p^m+1)"));
      } else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "L * p^(n - R m), m = " + std::to_string(m);
        r.value = scaled_power(p.L, q, n - long(radius) * m);
        out.push_back(std::move(r));
      }
    }
  }

  {  // cyclotomic family
    if (aux)
      out.push_back(cyclotomic_family_bound(p, *aux));
    else
      out.push_back(inapplicable("cyclotomic_family", "Bound IV",
                                 "needs cyclotomic auxiliary parameters"));
  }

  {  // direct sums of Hamming parity checks
    const char* name = "hamming_sum_family";
    const char* cite = "Bound V";
    if (radius < 1) {
      out.push_back(inapplicable(name, cite, "needs list radius >= 1"));
    } else if (!is_prime_power(q)) {
      out.push_back(inapplicable(name, cite, "q must be a prime power"));
    } else {
      int m = 0;
      for (int mm = 3; mm < 64; ++mm) {
        mpz_class need = mpz_class(radius) * ((zpow(q, mm) - 1) / (q - 1));
        if (need > n) break;
        m = mm;
      }
      if (m == 0) {
        out.push_back(
            inapplicable(name, cite, "length below u (q^3 - 1)/(q - 1)"));
      } else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "L * q^(n - m u), m = " + std::to_string(m);
        r.value = scaled_power(p.L, q, n - long(m) * radius);
        out.push_back(std::move(r));
      }
    }
  }

  return out;
}

std::vector<BoundResult> length_bounds(const LengthQuery& query,
                                       const std::optional<CyclotomicParams>& aux,
                                       const std::vector<VerifiedCover>& covers) {
  std::vector<BoundResult> out;
  const int q = query.q;
  const int s = query.defect;
  if (s < 0) fail(Errc::bad_params, "defect must be >= 0");
  if (!query.d) fail(Errc::missing_param, "length ceilings need a distance d");
  const int d = *query.d;
  if (d < 1) fail(Errc::bad_params, "need d >= 1");
  const int radius = (d - 1) / 2;

  {  // exclusion via a registered linear cover
    const char* name = "defect_exclusion_via_cover";
    const char* cite = "Thm 5.1";
    std::optional<long> best;
    std::string prov;
    for (const auto& cover : covers) {
      if (cover.radius > radius) continue;
      // need a linear cover: size q^k0 so the redundancy is defined
      mpz_class size = cover.size;
      int k0 = 0;
      while (size % q == 0) {
        size /= q;
        ++k0;
      }
      if (size != 1) continue;
      int r0 = cover.n - k0;
      if (r0 < d + s) continue;
      long ceiling = cover.n - 1;
      if (!best || ceiling < *best) {
        best = ceiling;
        prov = cover.provenance;
      }
    }
    if (!best) {
      out.push_back(
          inapplicable(name, cite, "no registered linear cover certifies an exclusion"));
    } else {
      BoundResult r;
      r.name = name;
      r.citation = cite;
      r.closed_form = "n' - 1 for a linear [n', n'-r0] cover, r0 >= d + s";
      r.value = *best;
      if (!prov.empty()) r.assumptions.push_back(prov);
      r.assumptions.push_back("defect-" + std::to_string(s) + " codes excluded from length " +
                              std::to_string(*best + 1) + " on");
      out.push_back(std::move(r));
    }
  }

  {  // exclusion via the embedded length-function table
    const char* name = "defect_exclusion_via_length_table";
    const char* cite = "Sec. 5";
    auto hit = tables::best_exclusion_length(q, radius, d + s);
    if (!hit) {
      out.push_back(inapplicable(
          name, cite, "no stored length-function entry with redundancy >= d + s"));
    } else {
      BoundResult r;
      r.name = name;
      r.citation = cite;
      r.closed_form = "l_q(r, R) - 1, r = " + std::to_string(hit->r);
      r.value = *hit->entry.value - 1;
      r.assumptions.push_back("length-function entry " + hit->entry.citation);
      out.push_back(std::move(r));
    }
  }

  {  // exclusion via cyclotomic construction
    const char* name = "cyclotomic_defect_exclusion";
    const char* cite = "Thm 5.2";
    if (!aux) {
      out.push_back(inapplicable(name, cite, "needs cyclotomic auxiliary parameters"));
    } else if (d < 2 * aux->e + 1) {
      out.push_back(inapplicable(name, cite, "distance below 2e + 1"));
    } else {
      CyclotomicDerived der = cyclotomic_derive(q, *aux);
      if (der.N != 1) {
        out.push_back(inapplicable(name, cite, "N != 1"));
      } else if (mpz_class(aux->e) * aux->m <= d - 1 + s) {
        out.push_back(inapplicable(name, cite, "e m <= d - 1 + s: no exclusion"));
      } else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "n1 - 1";
        r.value = der.n1 - 1;
        r.assumptions.push_back("cyclotomic parameters supplied by caller");
        out.push_back(std::move(r));
      }
    }
  }

  {  // odd divisors of q-1
    const char* name = "odd_divisor_exclusion";
    const char* cite = "Cor 5.1";
    if (d % 2 == 0) {
      out.push_back(inapplicable(name, cite, "needs an odd distance 2e + 1"));
    } else {
      int e = (d - 1) / 2;
      if (e < 2 || e % 2 == 0)
        out.push_back(inapplicable(name, cite,
                                   "needs odd e >= 2, got e = " + std::to_string(e)));
      else if ((q - 1) % e != 0)
        out.push_back(inapplicable(name, cite, "e must divide q - 1"));
      else if (e % 3 == 0)
        out.push_back(inapplicable(name, cite, "needs gcd(e, 3) = 1"));
      else if (s > 1)
        out.push_back(inapplicable(name, cite, "stated for defect <= 1 only"));
      else {
        BoundResult r;
        r.name = name;
        r.citation = cite;
        r.closed_form = "q^3 - 2";
        r.value = mpz_class(q) * q * q - 2;
        out.push_back(std::move(r));
      }
    }
  }

  {  // high-distance linear codes
    const char* name = "high_distance_defect_length";
    const char* cite = "Sec. 5";
    if (!query.linear) {
      out.push_back(inapplicable(name, cite, "holds for linear codes only"));
    } else if (d <= q) {
      out.push_back(inapplicable(name, cite, "needs d > q"));
    } else {
      BoundResult r;
      r.name = name;
      r.citation = cite;
      r.closed_form = "d - 2 + 2 (q^(s+1) - 1)/(q - 1)";
      r.value = mpz_class(d) - 2 + 2 * ((zpow(q, s + 1) - 1) / (q - 1));
      r.assumptions.push_back("linear codes only");
      out.push_back(std::move(r));
    }
  }

  {  // codes attaining the generalized Singleton bound
    const char* name = "st_attaining_length";
    const char* cite = "Thm 5.3";
    if (radius < 3) {
      out.push_back(inapplicable(name, cite, "needs list radius >= 3"));
    } else if (!query.c) {
      out.push_back(inapplicable(name, cite, "needs caller constant c"));
    } else {
      BoundResult r;
      r.name = name;
      r.citation = cite;
      r.closed_form = "c q^((R+1)/R) (ln q)^(1/R)";
      r.value_real = *query.c *
                     std::pow(double(q), double(radius + 1) / radius) *
                     std::pow(std::log(double(q)), 1.0 / radius);
      r.assumptions.push_back("constant c supplied by caller");
      r.assumptions.push_back("applies to codes attaining the generalized Singleton bound");
      out.push_back(std::move(r));
    }
  }

  return out;
}

BoundResult first_order_rm_size_bound(int m, long L) {
  if (m < 2 || m % 2 != 0) fail(Errc::bad_params, "needs even m >= 2");
  BoundResult r;
  r.name = "first_order_rm_size";
  r.citation = "Cor 2.3";
  r.closed_form = "L * 2^(m+1)";
  r.value = mpz_class(L) * zpow(2, m + 1);
  r.assumptions.push_back("needs list radius >= 2^(m-1) - 2^((m-2)/2) at length 2^m");
  return r;
}

BoundResult fixed64_size_bound(int s, long L) {
  if (s < 1) fail(Errc::bad_params, "needs s >= 1");
  BoundResult r;
  r.name = "fixed64_size";
  r.citation = "Cor 2.3";
  r.closed_form = "64 L";
  r.value = mpz_class(64) * L;
  r.counts_for_tightest = false;
  r.assumptions.push_back("for (s-1, L) list-decodable codes of length 2s+7");
  r.assumptions.push_back(
      "reported for reference only: contradicts exact covering numbers at small lengths");
  return r;
}

BoundResult asymptotic_list_size_bound(int q, int radius, long t, long n, long L) {
  const char* name = "asymptotic_list_size";
  const char* cite = "Cor 2.4";
  if (q < 8 || q % 2 != 0 || !is_prime_power(q))
    return inapplicable(name, cite, "needs an even prime power q >= 8");
  if (radius < 4) return inapplicable(name, cite, "needs list radius >= 4");
  long m = long(std::ceil(std::log(double(radius + 1)) / std::log(double(q)) -
                          1e-9)) + 1;
  if (t < 3 * m + 2)
    return inapplicable(name, cite, "needs t >= 3m + 2 = " + std::to_string(3 * m + 2));
  mpz_class threshold = mpz_class(radius) * zpow(q, (t - 1) * radius) +
                        2 * zpow(q, t - 2);
  for (long j = 3; j <= m + 2; ++j) threshold += zpow(q, t - j);
  if (mpz_class(n) < threshold)
    return inapplicable(name, cite,
                        "length below the threshold " + threshold.get_str());
  if (n - t * radius > 1'000'000)
    fail(Errc::budget_exceeded, "bound value exceeds representable size");
  BoundResult r;
  r.name = name;
  r.citation = cite;
  r.closed_form = "L * q^(n - t R)";
  r.value = scaled_power(L, q, n - t * radius);
  r.assumptions.push_back("existence of the underlying covers is cited, not verified here");
  return r;
}

double entropy_q(int q, double r) {
  if (q < 2) fail(Errc::bad_params, "entropy needs q >= 2");
  if (r < 0.0 || r > 1.0) fail(Errc::out_of_range, "entropy argument outside [0, 1]");
  double lq = std::log(double(q));
  auto logq = [&](double x) { return std::log(x) / lq; };
  if (r == 0.0) return 0.0;
  if (r == 1.0) return logq(double(q - 1));
  return r * logq(double(q - 1)) - r * logq(r) - (1.0 - r) * logq(1.0 - r);
}

LadderResult bound_ladder(const CodeParams& p,
                          const std::vector<VerifiedCover>& registry,
                          const std::optional<CyclotomicParams>& aux,
                          std::optional<double> c) {
  if (!p.d && !p.d_list)
    fail(Errc::nothing_applicable, "need d or d_list for any bound");
  const int radius = p.list_radius();
  std::vector<BoundResult> rows;
  rows.push_back(singleton_bound(p));
  rows.push_back(generalized_singleton_ST(p));
  rows.push_back(redundancy_list_bound(p));
  rows.push_back(sphere_packing_list(p));
  rows.push_back(griesmer_bound(p));
  if (auto d = p.distance_or_derived(); d && p.n == p.q + 2 && *d == p.q) {
    if (p.q % 2 == 1)
      rows.push_back(bush_bound(p.q));
    else
      rows.push_back(inapplicable("bush", "Sec. 1", "q is even"));
  }

  {  // best covering code available for (n, radius)
    std::optional<VerifiedCover> best;
    for (const auto& row : tables::covering_sources(p.q, p.n, radius)) {
      VerifiedCover v{row.size, p.n, row.base_radius, true,
                      row.citation + ": " + row.note};
      if (!best || v.size < best->size) best = v;
    }
    for (const auto& cover : registry) {
      if (cover.n > p.n || cover.radius > radius) continue;
      VerifiedCover v = cover;
      if (v.n < p.n) v.size *= zpow(p.q, p.n - v.n);
      v.n = p.n;
      if (!best || v.size < best->size) best = v;
    }
    if (best)
      rows.push_back(covering_code_bound(*best, p.n, radius, p.L));
    else
      rows.push_back(inapplicable("covering_code", "Thm 2.1",
                                  "no verified cover or table entry available"));
  }

  for (auto& r : family_construction_bounds(p, aux, c)) rows.push_back(std::move(r));

  if (p.q == 2 && p.n >= 9 && p.n % 2 == 1 && radius == (p.n - 7) / 2 - 1)
    rows.push_back(fixed64_size_bound((p.n - 7) / 2, p.L));

  bool any = false;
  for (const auto& r : rows) any = any || r.applicable;
  if (!any) fail(Errc::nothing_applicable, "no bound applies to these parameters");

  std::stable_sort(rows.begin(), rows.end(),
                   [](const BoundResult& a, const BoundResult& b) {
                     auto rank = [](const BoundResult& x) {
                       return x.applicable && x.value ? 0 : x.applicable ? 1 : 2;
                     };
                     if (rank(a) != rank(b)) return rank(a) < rank(b);
                     if (rank(a) == 0 && a.value != b.value) return *a.value < *b.value;
                     return a.name < b.name;
                   });
  LadderResult out;
  out.rows = std::move(rows);
  for (size_t i = 0; i < out.rows.size(); ++i) {
    const auto& r = out.rows[i];
    if (r.applicable && r.value && r.counts_for_tightest) {
      out.tightest = int(i);
      break;
    }
  }
  return out;
}

}  // namespace covbound
