#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace covbound::tables {

// One quoted covering-code fact.  kind "K": params (q, a=n, b=R), value bounds
// K_q(n,R), the minimal size of a radius-R covering code of length n.  kind
// "length_function": params (q, a=r, b=R), value bounds l_q(r,R), the smallest
// length of a linear code with redundancy r and covering radius R.  Entries
// with a closed form carry a numeric evaluation instead of an integer value.
struct TableEntry {
  std::string kind;
  int q = 0;
  int a = 0;
  int b = 0;
  std::optional<mpz_class> value;
  std::optional<double> value_real;
  std::string closed_form;  // nonempty iff value_real is used
  bool exact = false;       // true: value is K/l itself, false: upper bound
  std::string citation;
  std::string note;
};

// All stored facts matching the parameters exactly.
std::vector<TableEntry> k_entries(int q, int n, int radius);
std::vector<TableEntry> length_entries(int q, int r, int radius);

// Best matching fact (smallest value; exact preferred on ties), if any.
std::optional<TableEntry> lookup_K(int q, int n, int radius);
std::optional<TableEntry> lookup_length(int q, int r, int radius);

// A covering code usable at length n with radius <= R, derived from a stored
// fact: a cover of length n0 <= n and radius R0 <= R extends by q^(n-n0)
// direct-sum coordinates without changing the radius.
struct CoverRow {
  mpz_class size;       // size of the length-n cover this fact guarantees
  int base_length = 0;  // n0 of the underlying entry
  int base_radius = 0;  // R0 of the underlying entry
  std::string citation;
  std::string note;
};

std::vector<CoverRow> covering_sources(int q, int n, int radius);

// Largest redundancy r with a stored l_q(r,R) <= n (so an [n, n-r] covering
// code of radius R exists), together with the witnessing entry.
struct RedundancyHit {
  int r = 0;
  TableEntry entry;
};

std::optional<RedundancyHit> best_redundancy(int q, int radius, int n);

// Smallest stored integer length l_q(r, R') with R' <= radius and r >= r_min:
// every length from that value on admits an [n, n-r] covering code of radius
// <= radius with redundancy at least r_min.
std::optional<RedundancyHit> best_exclusion_length(int q, int radius, int r_min);

}  // namespace covbound::tables
