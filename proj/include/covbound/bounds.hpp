#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "covbound/covering.hpp"
#include "covbound/tables.hpp"

namespace covbound {

// Parameters a size bound is asked about.  d is a minimum Hamming distance,
// d_list a list-decoding radius; when only d is given, d_list derives as
// floor((d-1)/2).  L is the list size (1 = unique decoding).
struct CodeParams {
  int q = 0;
  int n = 0;
  std::optional<int> d;
  std::optional<int> d_list;
  long L = 1;
  std::optional<int> k;
  bool linear = false;

  int list_radius() const;  // d_list, or derived from d; throws missing_param
  // d when present; for L == 1 a (d_list, 1) code has distance >= 2*d_list+1.
  std::optional<int> distance_or_derived() const;
};

struct BoundResult {
  std::string name;
  std::string citation;
  bool applicable = true;
  std::string reason;  // set when not applicable
  std::optional<mpz_class> value;
  std::optional<double> value_real;  // closed-form (real) ceilings only
  std::string closed_form;
  std::vector<std::string> assumptions;
  bool counts_for_tightest = true;
};

// A covering code whose radius has been established (exactly, or as a sound
// upper bound - never by sampling).  Feeds the covering-code size bound.
struct VerifiedCover {
  mpz_class size;
  int n = 0;
  int radius = 0;
  bool exact = true;  // false: radius is a verified upper bound
  std::string provenance;
};

// --- individual size bounds -------------------------------------------------

BoundResult singleton_bound(const CodeParams& p);
BoundResult generalized_singleton_ST(const CodeParams& p);
BoundResult redundancy_list_bound(const CodeParams& p);
BoundResult sphere_packing_list(const CodeParams& p);
BoundResult griesmer_bound(const CodeParams& p);  // linear codes only
int griesmer_max_k(int q, int n, int d);
BoundResult bush_bound(int q);  // A_q(q+2, q) <= q^3 - 2, odd q

// The size bound from a covering code: |C| <= L |C'| whenever the cover's
// radius is at most the list radius.  Covers shorter than n extend by
// direct-sum coordinates.  Throws radius_not_verified for estimates,
// radius_too_large when the (extended) cover radius exceeds d_list.
BoundResult covering_code_bound(const VerifiedCover& cover, int n, int d_list, long L);
BoundResult covering_code_bound(const Code& cover, const RadiusResult& radius, int n,
                                int d_list, long L);
BoundResult covering_code_bound(const tables::TableEntry& entry, int n, int d_list,
                                long L);

// ceil(q^k / |cover|) for a perfect cover: the forced list size at the
// cover's packing radius.  Throws not_perfect unless |cover| * V(n,R) = q^n
// for some R (the perfection identity).
mpz_class list_size_lower_bound(int q, int k, int n, const mpz_class& cover_size);

// --- cyclotomic auxiliary data ------------------------------------------------

struct CyclotomicParams {
  int m = 0;
  long e = 0;
  long a = 0;
  std::vector<long> deltas;  // Delta_1..Delta_e
};

struct CyclotomicDerived {
  mpz_class delta;  // gcd(q^m-1, a_1..a_e), a_i = a + Delta_i (q^m-1)/e
  mpz_class n1;     // (q^m-1)/delta
  mpz_class N;      // gcd((q^m-1)/(q-1), a e)
};

// Validates the structural constraints and computes the derived quantities;
// throws bad_params on violations.  N != 1 is reported, not thrown.
CyclotomicDerived cyclotomic_derive(int q, const CyclotomicParams& aux);

// --- families of generalized Singleton type bounds ---------------------------

// All bounds of shape L * q^(n - ...) driven by covering-code families:
//   redundancy_from_length_table (via the embedded length-function table)
//   odd_radius_binary_family     (binary, odd list radius)
//   asymptotic_length_family     (caller-supplied constant c)
//   even_radius_prime_family     (odd prime fields, even list radius)
//   cyclotomic_family            (requires aux; via cyclotomic_derive)
//   hamming_sum_family           (direct-sum construction, m >= 3)
// Each result explains inapplicability; caller-supplied constants are tagged.
std::vector<BoundResult> family_construction_bounds(
    const CodeParams& p, const std::optional<CyclotomicParams>& aux = {},
    std::optional<double> c = {});

// The cyclotomic bound alone; the aux-less overload throws missing_aux.
BoundResult cyclotomic_family_bound(const CodeParams& p, const CyclotomicParams& aux);
BoundResult cyclotomic_family_bound(const CodeParams& p);

// --- length ceilings for small-defect codes -----------------------------------

struct LengthQuery {
  int q = 0;
  std::optional<int> d;
  int defect = 0;  // Singleton defect s: 0 = MDS, 1 = almost MDS
  bool linear = false;
  std::optional<double> c;  // constant for the asymptotic ceilings
};

std::vector<BoundResult> length_bounds(
    const LengthQuery& query, const std::optional<CyclotomicParams>& aux = {},
    const std::vector<VerifiedCover>& covers = {});

// --- quarantined formula evaluators ------------------------------------------

// Reed-Muller cover consequence at length 2^m (m even): |C| <= L 2^(m+1).
BoundResult first_order_rm_size_bound(int m, long L);
// The "64 L" claim for (s-1, L) list-decodable codes in F_2^(2s+7).  Evaluated
// on request but never entered into ladder minima: it contradicts exact
// covering numbers at small lengths.
BoundResult fixed64_size_bound(int s, long L);
// Fully explicit asymptotic list bound L*q^(n - t*radius): checks its length
// threshold exactly; desk-scale lengths sit far below it.
BoundResult asymptotic_list_size_bound(int q, int radius, long t, long n, long L);

// --- entropy ------------------------------------------------------------------

double entropy_q(int q, double r);  // q-ary entropy; throws out_of_range

// --- the ladder ----------------------------------------------------------------

struct LadderResult {
  std::vector<BoundResult> rows;
  int tightest = -1;  // index into rows of the smallest counting value
};

// Evaluates every bound applicable to p, drawing covering codes from the
// embedded tables plus caller-supplied verified covers.  Throws
// nothing_applicable when no bound fits.
LadderResult bound_ladder(const CodeParams& p,
                          const std::vector<VerifiedCover>& registry = {},
                          const std::optional<CyclotomicParams>& aux = {},
                          std::optional<double> c = {});

}  // namespace covbound
