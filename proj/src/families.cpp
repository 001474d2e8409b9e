#include "covbound/families.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <set>
#include <sstream>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"
#include "covbound/kernels.hpp"

namespace covbound {

namespace {

int get_param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    fail(Errc::missing_param, "family '" + spec.name + "' needs parameter '" + key + "'");
  return it->second;
}

[[noreturn]] void check_failed(const std::string& family, const std::string& what) {
  fail(Errc::self_check_failed, family + ": " + what);
}

// Distance/weight checks enumerate q^k codewords; skip them (silently) when
// that blows the work budget, so huge instances still construct.
bool enumeration_affordable(const LinearCode& c) {
  std::uint64_t size = 0;
  try {
    size = pow_u64(std::uint64_t(c.field()->q()), c.k());
  } catch (const ToolError&) {
    return false;
  }
  return size <= work_budget() && size * std::uint64_t(std::max(c.n(), 1)) <= 64 * work_budget();
}

void check_min_distance(const FamilyCode& fc) {
  if (!enumeration_affordable(fc.code)) return;
  int d = min_distance(fc.code);
  if (d != fc.advertised_d) {
    std::ostringstream os;
    os << "minimum distance " << d << ", advertised " << fc.advertised_d;
    check_failed(fc.name, os.str());
  }
}

// |C| * |ball of radius (d-1)/2| == q^n, the defining property of a perfect
// code; only called for families whose advertised d is odd.
void check_perfect(const FamilyCode& fc) {
  const int q = fc.code.field()->q();
  const int n = fc.code.n();
  const int e = (fc.advertised_d - 1) / 2;
  mpz_class ball = 0;
  mpz_class binom = 1, qm1 = 1;
  for (int j = 0; j <= e; ++j) {
    ball += binom * qm1;
    binom = binom * (n - j) / (j + 1);
    qm1 *= (q - 1);
  }
  mpz_class size, space;
  mpz_ui_pow_ui(size.get_mpz_t(), unsigned(q), unsigned(fc.code.k()));
  mpz_ui_pow_ui(space.get_mpz_t(), unsigned(q), unsigned(n));
  if (size * ball != space) check_failed(fc.name, "not perfect");
}

// ---- polynomial helpers over the prime field (used by the Golay codes) ----

using Poly = std::vector<Fel>;  // coefficient i belongs to x^i

Poly poly_mod(const FieldPtr& f, Poly a, const Poly& m) {
  while (a.size() >= m.size()) {
    Fel lead = a.back();
    if (lead != 0) {
      Fel scale = f->div(lead, m.back());
      size_t shift = a.size() - m.size();
      for (size_t i = 0; i < m.size(); ++i)
        a[shift + i] = f->sub(a[shift + i], f->mul(scale, m[i]));
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Builds the [n, k] cyclic code generated by g (deg n-k), in systematic form.
LinearCode cyclic_code(const FieldPtr& f, int n, const Poly& g, const std::string& family) {
  Poly xn_minus_1(size_t(n) + 1, 0);
  xn_minus_1[0] = f->neg(1);
  xn_minus_1[size_t(n)] = 1;
  if (!poly_mod(f, xn_minus_1, g).empty())
    check_failed(family, "generator polynomial does not divide x^n - 1");
  int k = n - int(g.size()) + 1;
  Matrix gen(f, k, n);
  for (int r = 0; r < k; ++r)
    for (size_t j = 0; j < g.size(); ++j) gen.at(r, r + int(j)) = g[j];
  int rank = 0;
  Matrix sys = rref(gen, &rank);
  if (rank != k) check_failed(family, "cyclic generator rows not independent");
  return LinearCode(sys);
}

}  // namespace

Matrix projective_columns(FieldPtr f, int m) {
  if (m < 1) fail(Errc::bad_params, "need m >= 1");
  const int q = f->q();
  std::uint64_t space = 0;
  try {
    space = pow_u64(std::uint64_t(q), m);
  } catch (const ToolError&) {
    fail(Errc::bad_params, "q^m overflows");
  }
  check_budget(space, "projective point enumeration");
  std::vector<Word> cols;
  for (std::uint64_t idx = 1; idx < space; ++idx) {
    Word v = index_to_word(idx, q, m);
    Fel first = 0;
    for (Fel d : v)
      if (d != 0) { first = d; break; }
    if (first == 1) cols.push_back(std::move(v));
  }
  Matrix h(f, m, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int r = 0; r < m; ++r) h.at(r, j) = cols[size_t(j)][size_t(r)];
  return h;
}

FamilyCode make_hamming(int q, int m) {
  FieldPtr f = field_make(q);
  if (m < 2) fail(Errc::bad_params, "hamming needs m >= 2");
  Matrix h = projective_columns(f, m);
  FamilyCode fc{LinearCode(nullspace(h)), "hamming", 3, 1, true,
                "Hamming code: parity checks are the projective points of F_q^m"};
  check_min_distance(fc);
  check_perfect(fc);
  return fc;
}

FamilyCode make_simplex(int q, int m) {
  FieldPtr f = field_make(q);
  if (m < 2) fail(Errc::bad_params, "simplex needs m >= 2");
  FamilyCode fc{LinearCode(projective_columns(f, m)), "simplex", 0, {}, false,
                "simplex code: generator columns are the projective points of F_q^m"};
  std::uint64_t w = 1;
  for (int i = 0; i < m - 1; ++i) w *= std::uint64_t(q);
  fc.advertised_d = int(w);
  if (enumeration_affordable(fc.code)) {
    auto hist = kernels::weight_histogram(fc.code);
    for (int wt = 1; wt <= fc.code.n(); ++wt)
      if (hist[size_t(wt)] != 0 && wt != int(w))
        check_failed("simplex", "nonzero word of weight " + std::to_string(wt));
  }
  return fc;
}

FamilyCode make_golay_binary() {
  FieldPtr f = field_make(2);
  // x^11 + x^9 + x^7 + x^6 + x^5 + x + 1
  Poly g = {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1};
  FamilyCode fc{cyclic_code(f, 23, g, "golay_binary"), "golay_binary", 7, 3, true,
                "binary Golay code [23,12,7], perfect"};
  check_min_distance(fc);
  check_perfect(fc);
  return fc;
}

FamilyCode make_golay_ternary() {
  FieldPtr f = field_make(3);
  // x^5 + x^4 + 2x^3 + x^2 + 2
  Poly g = {2, 0, 1, 2, 1, 1};
  FamilyCode fc{cyclic_code(f, 11, g, "golay_ternary"), "golay_ternary", 5, 2, true,
                "ternary Golay code [11,6,5], perfect"};
  check_min_distance(fc);
  check_perfect(fc);
  return fc;
}

FamilyCode make_reed_solomon(int q, int n, int k,
                             const std::optional<std::vector<int>>& points) {
  FieldPtr f = field_make(q);
  if (n < 1 || k < 1 || k > n) fail(Errc::bad_params, "reed_solomon needs 1 <= k <= n");
  std::vector<Fel> pts;
  if (points) {
    if (int(points->size()) != n)
      fail(Errc::bad_params, "reed_solomon: need exactly n evaluation points");
    std::set<int> seen;
    for (int p : *points) {
      if (p < 0 || p >= q) fail(Errc::bad_params, "evaluation point out of range");
      if (!seen.insert(p).second) fail(Errc::bad_params, "repeated evaluation point");
      pts.push_back(Fel(p));
    }
  } else {
    if (n > q) fail(Errc::bad_params, "reed_solomon needs n <= q");
    for (int p = 0; p < n; ++p) pts.push_back(Fel(p));
  }
  Matrix gen(f, k, n);
  for (int j = 0; j < n; ++j) {
    Fel v = 1;
    for (int r = 0; r < k; ++r) {
      gen.at(r, j) = v;
      v = f->mul(v, pts[size_t(j)]);
    }
  }
  FamilyCode fc{LinearCode(gen), "reed_solomon", n - k + 1, {}, false,
                "Reed-Solomon code: evaluations of degree < k polynomials"};
  check_min_distance(fc);
  return fc;
}

FamilyCode make_reed_muller1(int m) {
  if (m < 1) fail(Errc::bad_params, "reed_muller1 needs m >= 1");
  if (m > 20) fail(Errc::bad_params, "reed_muller1: m too large");
  FieldPtr f = field_make(2);
  const int n = 1 << m;
  Matrix gen(f, m + 1, n);
  for (int t = 0; t < n; ++t) {
    gen.at(0, t) = 1;
    for (int i = 1; i <= m; ++i) gen.at(i, t) = Fel((t >> (m - i)) & 1);
  }
  FamilyCode fc{LinearCode(gen), "reed_muller1", 1 << (m - 1), {}, false,
                "first-order Reed-Muller code [2^m, m+1, 2^(m-1)]"};
  if (m % 2 == 0) {
    // Covering radius of RM(1,m) is known exactly for even m.
    fc.advertised_radius = (1 << (m - 1)) - (1 << ((m - 2) / 2));
    fc.radius_exact = true;
  }
  check_min_distance(fc);
  return fc;
}

FamilyCode make_kasami(int m) {
  if (m < 1) fail(Errc::bad_params, "kasami needs m >= 1");
  if (m > 4) fail(Errc::bad_params, "kasami: field 2^(2m) exceeds supported order");
  FieldPtr f = field_make(1 << (2 * m));
  const int q = f->q();
  const int n = q - 1;
  const int half = 1 << m;  // |GF(2^m)|

  // Frobenius x -> x^2 and the two trace maps, all computed inside GF(2^2m).
  auto tr_to_f2 = [&](Fel z, int steps) {
    Fel acc = 0, cur = z;
    for (int i = 0; i < steps; ++i) {
      acc = f->add(acc, cur);
      cur = f->mul(cur, cur);
    }
    return acc;
  };

  // Subfield GF(2^m) = fixed points of x -> x^(2^m); pick a GF(2)-basis of it
  // greedily in element order.
  std::vector<Fel> subfield;
  for (int z = 0; z < q; ++z) {
    Fel p = Fel(z);
    for (int i = 0; i < m; ++i) p = f->mul(p, p);
    if (p == Fel(z)) subfield.push_back(Fel(z));
  }
  if (int(subfield.size()) != half) check_failed("kasami", "subfield size");
  std::set<Fel> span = {0};
  std::vector<Fel> sub_basis;
  for (Fel z : subfield) {
    if (span.count(z)) continue;
    sub_basis.push_back(z);
    std::set<Fel> next = span;
    for (Fel s : span) next.insert(f->add(s, z));
    span = std::move(next);
  }
  if (int(sub_basis.size()) != m) check_failed("kasami", "subfield basis");

  const Fel alpha = f->primitive_element();
  std::vector<Fel> coord(static_cast<size_t>(n));
  Fel x = 1;
  for (int t = 0; t < n; ++t) {
    coord[size_t(t)] = x;
    x = f->mul(x, alpha);
  }

  Matrix gen(field_make(2), 3 * m, n);
  int row = 0;
  for (Fel a : sub_basis) {
    for (int t = 0; t < n; ++t) {
      Fel norm = f->pow(coord[size_t(t)], half + 1);
      gen.at(row, t) = tr_to_f2(f->mul(a, norm), m);
    }
    ++row;
  }
  for (int i = 0; i < 2 * m; ++i) {
    Fel b = Fel(1 << i);  // polynomial basis of GF(2^2m) over GF(2)
    for (int t = 0; t < n; ++t)
      gen.at(row, t) = tr_to_f2(f->mul(b, coord[size_t(t)]), 2 * m);
    ++row;
  }

  FamilyCode fc{LinearCode(gen), "kasami", 0, {}, false,
                "Kasami code [2^(2m)-1, 3m]: traces of a*x^(2^m+1) + b*x"};
  if (m == 1) {
    fc.advertised_d = 1;  // degenerates to the full space F_2^3
    check_min_distance(fc);
    return fc;
  }
  const int base = 1 << (2 * m - 1);
  const int off = 1 << (m - 1);
  fc.advertised_d = base - off;
  if (enumeration_affordable(fc.code)) {
    auto hist = kernels::weight_histogram(fc.code);
    std::set<int> allowed = {base - off, base, base + off};
    for (int wt = 1; wt <= n; ++wt)
      if (hist[size_t(wt)] != 0 && !allowed.count(wt))
        check_failed("kasami", "unexpected weight " + std::to_string(wt));
    for (int wt : allowed)
      if (hist[size_t(wt)] == 0)
        check_failed("kasami", "missing weight " + std::to_string(wt));
  }
  return fc;
}

FamilyCode make_block_diagonal(int q, int m, int u) {
  FieldPtr f = field_make(q);
  if (m < 2) fail(Errc::bad_params, "block_diagonal needs m >= 2");
  if (u < 1) fail(Errc::bad_params, "block_diagonal needs u >= 1");
  Matrix hm = projective_columns(f, m);
  const int nb = hm.cols;
  Matrix h(f, m * u, nb * u);
  for (int b = 0; b < u; ++b)
    for (int r = 0; r < m; ++r)
      for (int j = 0; j < nb; ++j) h.at(b * m + r, b * nb + j) = hm.at(r, j);
  FamilyCode fc{LinearCode(nullspace(h)), "block_diagonal", 3, u, false,
                "direct sum of u Hamming codes; covering radius at most u"};
  check_min_distance(fc);
  return fc;
}

FamilyCode make_repetition(int q, int n) {
  FieldPtr f = field_make(q);
  if (n < 1) fail(Errc::bad_params, "repetition needs n >= 1");
  Matrix gen(f, 1, n);
  for (int j = 0; j < n; ++j) gen.at(0, j) = 1;
  FamilyCode fc{LinearCode(gen), "repetition", n, {}, false, "repetition code [n,1,n]"};
  check_min_distance(fc);
  return fc;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "hamming",       "simplex", "golay_binary",   "golay_ternary", "reed_solomon",
      "reed_muller1",  "kasami",  "block_diagonal", "repetition"};
  return names;
}

FamilyCode construct(const FamilySpec& spec) {
  const std::string& name = spec.name;
  if (name == "hamming")
    return make_hamming(get_param(spec, "q"), get_param(spec, "m"));
  if (name == "simplex")
    return make_simplex(get_param(spec, "q"), get_param(spec, "m"));
  if (name == "golay_binary") return make_golay_binary();
  if (name == "golay_ternary") return make_golay_ternary();
  if (name == "reed_solomon")
    return make_reed_solomon(get_param(spec, "q"), get_param(spec, "n"),
                             get_param(spec, "k"), spec.rs_points);
  if (name == "reed_muller1") return make_reed_muller1(get_param(spec, "m"));
  if (name == "kasami") return make_kasami(get_param(spec, "m"));
  if (name == "block_diagonal")
    return make_block_diagonal(get_param(spec, "q"), get_param(spec, "m"),
                               get_param(spec, "u"));
  if (name == "repetition")
    return make_repetition(get_param(spec, "q"), get_param(spec, "n"));
  fail(Errc::bad_params, "unknown family '" + name + "'");
}

}  // namespace covbound
