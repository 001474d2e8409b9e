#include "covbound/field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"

namespace covbound {

namespace {

// Polynomials over GF(p) as int coefficient vectors, index = degree.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of a modulo b (b monic), both over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  int db = poly_deg(b);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    int c = a[da];  // b is monic, so the quotient digit is just c
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
    }
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
  int m = poly_deg(f);
  if (m < 1) return false;
  for (int dd = 1; dd <= m / 2; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly g(dd + 1, 0);
      long t = idx;
      for (int i = 0; i < dd; ++i) {
        g[i] = int(t % p);
        t /= p;
      }
      g[dd] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// comparing coefficient tuples (c_0, c_1, ..., c_{m-1}) low-degree-first.
Poly smallest_irreducible(int p, int m) {
  long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    long t = idx;
    for (int i = m - 1; i >= 0; --i) {  // c_0 varies slowest
      f[i] = int(t % p);
      t /= p;
    }
    f[m] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  fail(Errc::bad_params, "no irreducible polynomial found (unreachable)");
}

Poly elem_to_poly(int a, int p, int m) {
  Poly f(m, 0);
  for (int i = 0; i < m; ++i) {
    f[i] = a % p;
    a /= p;
  }
  return f;
}

int poly_to_elem(const Poly& f, int p, int m) {
  int a = 0;
  for (int i = m - 1; i >= 0; --i) a = a * p + (i < int(f.size()) ? f[i] : 0);
  return a;
}

}  // namespace

std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) fail(Errc::bad_params, "field order must be at least 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  int m = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1)
    fail(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
  return {p, m};
}

FieldPtr field_make(int q) {
  static std::mutex cache_mutex;
  static std::map<int, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }

  if (q < 2 || q > kMaxFieldOrder)
    fail(Errc::bad_params, "field order " + std::to_string(q) +
                               " outside supported range 2.." +
                               std::to_string(kMaxFieldOrder));
  auto [p, m] = factor_prime_power(q);

  auto f = std::shared_ptr<Field>(new Field());
  f->q_ = q;
  f->p_ = p;
  f->m_ = m;

  Poly mod;
  if (m > 1) {
    mod = smallest_irreducible(p, m);
    f->modulus_.assign(mod.begin(), mod.end());
  }

  f->add_.resize(size_t(q) * q);
  f->mul_.resize(size_t(q) * q);
  f->neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    Poly pa = elem_to_poly(a, p, m);
    Poly na(m, 0);
    for (int i = 0; i < m; ++i) na[i] = (p - pa[i]) % p;
    f->neg_[a] = Fel(poly_to_elem(na, p, m));
    for (int b = 0; b < q; ++b) {
      Poly pb = elem_to_poly(b, p, m);
      Poly sum(m, 0);
      for (int i = 0; i < m; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f->add_[size_t(a) * q + b] = Fel(poly_to_elem(sum, p, m));
      Poly prod(2 * m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (m > 1) prod = poly_mod(prod, mod, p);
      f->mul_[size_t(a) * q + b] = Fel(poly_to_elem(prod, p, m));
    }
  }

  f->inv_.resize(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f->mul(Fel(a), Fel(b)) == 1) {
        f->inv_[a] = Fel(b);
        break;
      }

  // Smallest element (by index) generating the multiplicative group.
  int g = 0;
  for (int candidate = 1; candidate < q && g == 0; ++candidate) {
    int ord = 1;
    Fel x = Fel(candidate);
    while (x != 1) {
      x = f->mul(x, Fel(candidate));
      ++ord;
    }
    if (ord == q - 1) g = candidate;
  }
  f->exp_.resize(q - 1);
  f->log_.assign(q, -1);
  Fel x = 1;
  for (int i = 0; i < q - 1; ++i) {
    f->exp_[i] = x;
    f->log_[x] = i;
    x = f->mul(x, Fel(g));
  }

  FieldPtr result = f;
  std::lock_guard<std::mutex> lk(cache_mutex);
  auto [it, inserted] = cache.emplace(q, result);
  return it->second;
}

Fel Field::inv(Fel a) const {
  if (a == 0) fail(Errc::bad_params, "inverse of zero");
  return inv_[a];
}

Fel Field::pow(Fel a, long e) const {
  if (a == 0) {
    if (e < 0) fail(Errc::bad_params, "negative power of zero");
    return e == 0 ? Fel(1) : Fel(0);
  }
  long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_[size_t(long(log_[a]) * r % (q_ - 1))];
}

int Field::log_of(Fel a) const {
  if (a == 0) fail(Errc::bad_params, "log of zero");
  return log_[a];
}

int Field::order_of(Fel a) const {
  if (a == 0) fail(Errc::bad_params, "multiplicative order of zero");
  int ord = 1;
  Fel x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

}  // namespace covbound
