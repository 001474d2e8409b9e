#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace covbound {

// Field element: an index in 0..q-1.  For GF(p^m) the index's base-p digits
// are the coefficients of the representing polynomial (digit i = coefficient
// of x^i), so indices 0..p-1 are exactly the prime subfield.
using Fel = std::uint8_t;

class Field {
 public:
  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return m_; }

  // Modulus polynomial coefficients c_0..c_m (c_m = 1); empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const { return add_[size_t(a) * q_ + b]; }
  Fel sub(Fel a, Fel b) const { return add_[size_t(a) * q_ + neg_[b]]; }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel mul(Fel a, Fel b) const { return mul_[size_t(a) * q_ + b]; }
  Fel inv(Fel a) const;  // errors on 0
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, long e) const;

  // Discrete exp/log with respect to the fixed primitive element.  exp_at is
  // defined for 0 <= i < q-1 and has period q-1; log_of errors on 0.
  Fel primitive_element() const { return exp_[0 + (q_ > 2 ? 1 : 0)]; }
  Fel exp_at(int i) const { return exp_[i]; }
  int log_of(Fel a) const;

  // Nonzero multiplicative order (errors on 0).
  int order_of(Fel a) const;

 private:
  friend std::shared_ptr<const Field> field_make(int q);
  Field() = default;

  int q_ = 0, p_ = 0, m_ = 0;
  std::vector<int> modulus_;
  std::vector<Fel> add_, mul_, neg_, inv_, exp_;
  std::vector<int> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Builds GF(q) for a prime power q with 2 <= q <= kMaxFieldOrder.  Extension
// fields use the lexicographically smallest monic irreducible polynomial of
// degree m over GF(p), coefficients compared low-degree-first.  Throws
// Errc::not_prime_power / Errc::bad_params otherwise.  Results are cached and
// shared; Field objects are immutable.
FieldPtr field_make(int q);

// Returns {p, m} with q = p^m, or throws Errc::not_prime_power.
std::pair<int, int> factor_prime_power(int q);

}  // namespace covbound
