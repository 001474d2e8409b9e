#include "covbound/tables.hpp"

#include <algorithm>
#include <cmath>

#include "covbound/field.hpp"

namespace covbound::tables {

namespace {

mpz_class zpow(int q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), unsigned(q), unsigned(e));
  return r;
}

std::optional<std::pair<int, int>> pp_exponent(int q) {
  try {
    return factor_prime_power(q);
  } catch (...) {
    return std::nullopt;
  }
}

bool odd_prime_power(int q) { return q % 2 == 1 && pp_exponent(q).has_value(); }
bool odd_prime(int q) {
  auto pm = pp_exponent(q);
  return pm && pm->second == 1 && q % 2 == 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      if (d != x / d) out.push_back(x / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// The four individually quoted covering-code sizes.
struct FixedK {
  int q, n, radius;
  mpz_class value;
  bool exact;
  const char* citation;
  const char* note;
};

const std::vector<FixedK>& fixed_k() {
  static const std::vector<FixedK> v = {
      {2, 15, 3, 112, true, "Sec. 4", "Litsyn covering table"},
      {2, 16, 3, 192, false, "Sec. 2", "Litsyn covering table"},
      {2, 33, 4, 3 * zpow(2, 17), false, "Sec. 4", "Litsyn covering table"},
      {2, 33, 5, 11 * zpow(2, 13), false, "Sec. 4", "Litsyn covering table"},
  };
  return v;
}

TableEntry k_entry(int q, int n, int radius, mpz_class value, bool exact,
                   std::string citation, std::string note) {
  TableEntry e;
  e.kind = "K";
  e.q = q;
  e.a = n;
  e.b = radius;
  e.value = std::move(value);
  e.exact = exact;
  e.citation = std::move(citation);
  e.note = std::move(note);
  return e;
}

TableEntry length_entry(int q, int r, int radius, mpz_class value, bool exact,
                        std::string citation, std::string note) {
  TableEntry e;
  e.kind = "length_function";
  e.q = q;
  e.a = r;
  e.b = radius;
  e.value = std::move(value);
  e.exact = exact;
  e.citation = std::move(citation);
  e.note = std::move(note);
  return e;
}

// l_q(5,3) < 2.884 q^(2/3) (ln q)^(1/3); asymptotic, vacuous for tiny q.
double length53(int q) {
  return 2.884 * std::pow(double(q), 2.0 / 3.0) * std::cbrt(std::log(double(q)));
}

// Enumerates every stored length-function fact for this q and radius as
// (redundancy, entry) pairs with value <= max_len, calling sink(r, entry).
// Shapes follow the quoted constructions of codes with few nonzero weights.
template <typename Sink>
void for_length_facts(int q, int radius, const mpz_class& max_len, Sink&& sink) {
  const bool odd_pp = odd_prime_power(q);
  auto emit = [&](int r, int rad, mpz_class value, bool exact, const char* cite,
                  const char* note) {
    if (value < r || value < rad || r < rad) return;  // vacuous as a length claim
    if (value > max_len) return;
    sink(r, length_entry(q, r, rad, std::move(value), exact, cite, note));
  };

  if (radius >= 1) {
    // Hamming perfect covers: l_q(m, 1) <= (q^m-1)/(q-1).
    if (pp_exponent(q))
      for (int m = 2; m < 64; ++m) {
        mpz_class len = (zpow(q, m) - 1) / (q - 1);
        if (len > max_len) break;
        emit(m, 1, len, true, "Cor 2.2", "Hamming perfect code");
      }
  }
  if (radius >= 2 && odd_prime(q)) {
    // two-weight projective construction: l_p(m, 2) <= (p^m-1)/2, m even.
    for (int m = 2; m < 64; m += 2) {
      mpz_class len = (zpow(q, m) - 1) / 2;
      if (len > max_len) break;
      emit(m, 2, len, false, "Sec. 3", "two-weight code over the prime field");
    }
  }
  if (radius >= 3 && q == 2) {
    // dual Kasami: l_2(3m, 3) <= 2^(2m)-1.
    for (int m = 1; m < 31; ++m) {
      mpz_class len = zpow(2, 2 * m) - 1;
      if (len > max_len) break;
      emit(3 * m, 3, len, false, "Ex 3.1", "dual Kasami code");
    }
    // three-weight codes: l_2(m, 3) <= 2^(m-1)-1.
    for (int m = 3; m < 63; ++m) {
      mpz_class len = zpow(2, m - 1) - 1;
      if (len > max_len) break;
      emit(m, 3, len, false, "Ex 3.2", "three-weight code");
    }
    // three-weight codes, divisor variant: l_2(m+div, 3) <= 2^(m-1),
    // div | m, div != m, div != m/2, m even.
    for (int m = 2; m < 63; m += 2) {
      mpz_class len = zpow(2, m - 1);
      if (len > max_len) break;
      for (std::uint64_t dv : divisors(std::uint64_t(m)))
        if (int(dv) != m && 2 * int(dv) != m)
          emit(m + int(dv), 3, len, false, "Ex 3.3", "three-weight code");
    }
  }
  if (radius >= 3 && odd_pp) {
    // l_q(2m, 3) <= q^m-1, m odd.
    for (int m = 1; m < 64; m += 2) {
      mpz_class len = zpow(q, m) - 1;
      if (len > max_len) break;
      emit(2 * m, 3, len, false, "Ex 3.5", "three-weight code");
    }
  }
  if (radius >= 3) {
    double v = length53(q);
    if (v > 5.0 && mpz_class(long(std::ceil(v))) <= max_len) {
      TableEntry e;
      e.kind = "length_function";
      e.q = q;
      e.a = 5;
      e.b = 3;
      e.value_real = v;
      e.closed_form = "2.884 * q^(2/3) * (ln q)^(1/3)";
      e.exact = false;
      e.citation = "Sec. 2";
      e.note = "asymptotic length-function bound";
      sink(5, e);
    }
  }
  if (radius >= 4 && q == 2) {
    // four-weight codes: l_2(m+1, 4) <= 2^(m-1), m odd.
    for (int m = 3; m < 63; m += 2) {
      mpz_class len = zpow(2, m - 1);
      if (len > max_len) break;
      emit(m + 1, 4, len, false, "Ex 3.2", "four-weight code");
    }
  }
  if (radius >= 4 && odd_pp) {
    // l_q(2m, 4) <= q^m-1, m even; l_q(2m+1, 4) <= q^m, m odd.
    for (int m = 2; m < 64; m += 2) {
      mpz_class len = zpow(q, m) - 1;
      if (len > max_len) break;
      emit(2 * m, 4, len, false, "Ex 3.5", "four-weight code");
    }
    for (int m = 1; m < 64; m += 2) {
      mpz_class len = zpow(q, m);
      if (len > max_len) break;
      emit(2 * m + 1, 4, len, false, "Ex 3.5", "four-weight code");
    }
  }
  if (radius >= 5 && q == 2) {
    // five-weight codes on quotient lengths: l_2(m+1, 5) <= (2^m-1)/t for the
    // largest divisor t of 2^(m/2)+1 with 3 | t, t != 2^(m/2)+1; m = 2 mod 4.
    for (int m = 6; m < 63; m += 4) {
      std::uint64_t big = (std::uint64_t(1) << (m / 2)) + 1;
      std::uint64_t best_t = 0;
      for (std::uint64_t t : divisors(big))
        if (t % 3 == 0 && t != big) best_t = std::max(best_t, t);
      if (best_t == 0) continue;
      mpz_class len = (zpow(2, m) - 1) / long(best_t);
      if (len > max_len) continue;
      emit(m + 1, 5, len, false, "Ex 3.3", "five-weight code on quotient length");
    }
  }
  if (radius >= 6 && q == 2) {
    // six-weight variant: t | 2^(m/2)+1, 3 does not divide t, t != 2^(m/2)+1.
    for (int m = 6; m < 63; m += 4) {
      std::uint64_t big = (std::uint64_t(1) << (m / 2)) + 1;
      std::uint64_t best_t = 0;
      for (std::uint64_t t : divisors(big))
        if (t % 3 != 0 && t != big) best_t = std::max(best_t, t);
      if (best_t == 0) continue;
      mpz_class len = (zpow(2, m) - 1) / long(best_t);
      if (len > max_len) continue;
      emit(m + 2, 6, len, false, "Ex 3.3", "six-weight code on quotient length");
    }
  }
  if (radius >= 6 && odd_pp) {
    // l_q(2m+1, 6) <= q^m, m even.
    for (int m = 2; m < 64; m += 2) {
      mpz_class len = zpow(q, m);
      if (len > max_len) break;
      emit(2 * m + 1, 6, len, false, "Ex 3.5", "six-weight code");
    }
  }
  if (radius >= 7 && q == 2) {
    // cyclic seven-weight codes: l_2(5m/2, 7) <= 2^m-1, m = 0 mod 6.
    for (int m = 6; m < 63; m += 6) {
      mpz_class len = zpow(2, m) - 1;
      if (len > max_len) break;
      emit(5 * m / 2, 7, len, false, "Ex 3.4", "cyclic seven-weight code");
    }
  }
}

}  // namespace

std::vector<TableEntry> k_entries(int q, int n, int radius) {
  std::vector<TableEntry> out;
  for (const auto& f : fixed_k())
    if (f.q == q && f.n == n && f.radius == radius)
      out.push_back(k_entry(q, n, radius, f.value, f.exact, f.citation, f.note));
  if (radius == 1) {
    if (auto pm = pp_exponent(q))
      for (int m = 2; m < 64; ++m) {
        mpz_class len = (zpow(q, m) - 1) / (q - 1);
        if (len > n) break;
        if (len == n)
          out.push_back(k_entry(q, n, 1, zpow(q, n - m), true, "Cor 2.2",
                                "Hamming perfect code"));
      }
  }
  if (q == 2 && n == 23 && radius == 3)
    out.push_back(k_entry(2, 23, 3, zpow(2, 12), true, "Cor 2.2",
                          "binary Golay perfect code"));
  if (q == 3 && n == 11 && radius == 2)
    out.push_back(k_entry(3, 11, 2, zpow(3, 6), true, "Cor 2.2",
                          "ternary Golay perfect code"));
  if (q == 2) {
    for (int m = 2; m < 31; m += 2) {
      if ((1 << m) > n) break;
      if ((1 << m) == n && radius == (1 << (m - 1)) - (1 << ((m - 2) / 2)))
        out.push_back(k_entry(2, n, radius, zpow(2, m + 1), false, "Cor 2.3",
                              "first-order Reed-Muller cover"));
    }
  }
  return out;
}

std::vector<TableEntry> length_entries(int q, int r, int radius) {
  std::vector<TableEntry> out;
  mpz_class no_cap = zpow(2, 200);  // collect all shapes; filter on (r, radius)
  for_length_facts(q, radius, no_cap, [&](int rr, const TableEntry& e) {
    if (rr == r && e.b == radius) out.push_back(e);
  });
  return out;
}

namespace {

std::optional<TableEntry> best_of(std::vector<TableEntry> v) {
  if (v.empty()) return std::nullopt;
  auto key = [](const TableEntry& e) {
    return e.value ? mpz_class(*e.value)
                   : mpz_class(long(std::ceil(e.value_real.value_or(0))));
  };
  std::stable_sort(v.begin(), v.end(), [&](const TableEntry& x, const TableEntry& y) {
    mpz_class kx = key(x), ky = key(y);
    if (kx != ky) return kx < ky;
    return x.exact && !y.exact;
  });
  return v.front();
}

}  // namespace

std::optional<TableEntry> lookup_K(int q, int n, int radius) {
  return best_of(k_entries(q, n, radius));
}

std::optional<TableEntry> lookup_length(int q, int r, int radius) {
  return best_of(length_entries(q, r, radius));
}

std::vector<CoverRow> covering_sources(int q, int n, int radius) {
  std::vector<CoverRow> out;
  auto factor = [&](int n0) { return zpow(q, n - n0); };
  auto push = [&](int n0, int r0, const mpz_class& size, const std::string& cite,
                  std::string note) {
    if (n0 > n || r0 > radius) return;
    if (n0 < n) note += " extended to length " + std::to_string(n);
    out.push_back({size * factor(n0), n0, r0, cite, std::move(note)});
  };
  for (const auto& f : fixed_k())
    if (f.q == q)
      push(f.n, f.radius, f.value, f.citation,
           "K(" + std::to_string(q) + "," + std::to_string(f.n) + "," +
               std::to_string(f.radius) + ") from the Litsyn covering table");
  if (pp_exponent(q))
    for (int m = 2; m < 64; ++m) {
      mpz_class len = (zpow(q, m) - 1) / (q - 1);
      if (len > n) break;
      push(int(len.get_si()), 1, zpow(q, int(len.get_si()) - m), "Cor 2.2",
           "Hamming perfect code");
    }
  if (q == 2 && n >= 23) push(23, 3, zpow(2, 12), "Cor 2.2", "binary Golay perfect code");
  if (q == 3 && n >= 11) push(11, 2, zpow(3, 6), "Cor 2.2", "ternary Golay perfect code");
  if (q == 2)
    for (int m = 2; m < 31; m += 2) {
      if ((1 << m) > n) break;
      push(1 << m, (1 << (m - 1)) - (1 << ((m - 2) / 2)), zpow(2, m + 1), "Cor 2.3",
           "first-order Reed-Muller cover");
    }
  return out;
}

std::optional<RedundancyHit> best_redundancy(int q, int radius, int n) {
  std::optional<RedundancyHit> best;
  for_length_facts(q, radius, mpz_class(n), [&](int r, const TableEntry& e) {
    // closed-form entries compare as reals; integer entries were pre-filtered
    if (e.value_real && *e.value_real > double(n)) return;
    if (!best || r > best->r) best = RedundancyHit{r, e};
  });
  return best;
}

std::optional<RedundancyHit> best_exclusion_length(int q, int radius, int r_min) {
  std::optional<RedundancyHit> best;
  mpz_class no_cap = zpow(2, 200);
  for_length_facts(q, radius, no_cap, [&](int r, const TableEntry& e) {
    if (r < r_min || !e.value) return;
    if (!best || *e.value < *best->entry.value) best = RedundancyHit{r, e};
  });
  return best;
}

}  // namespace covbound::tables
