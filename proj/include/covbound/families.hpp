#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covbound/code.hpp"

namespace covbound {

// Request for a named construction.  Integer parameters are family-specific
// (q, m, n, k, u); reed_solomon accepts an optional evaluation-point list
// (field element indices; default: 0..n-1).
struct FamilySpec {
  std::string name;
  std::map<std::string, int> params;
  std::optional<std::vector<int>> rs_points;
};

struct FamilyCode {
  LinearCode code;
  std::string name;
  int advertised_d = 0;
  // Covering radius promised by the construction, when one is known.
  std::optional<int> advertised_radius;
  bool radius_exact = false;  // false: advertised_radius is an upper bound
  std::string description;
};

// Family names understood by construct().
const std::vector<std::string>& family_names();

// Builds the requested code and self-checks the advertised parameters
// (dimension always; minimum distance, weight structure and perfectness
// whenever the q^k enumeration fits the work budget).  Throws
// Errc::self_check_failed when a check fails, Errc::missing_param /
// Errc::bad_params for unusable requests.
FamilyCode construct(const FamilySpec& spec);

// Convenience constructors used throughout the tests and the claim registry.
FamilyCode make_hamming(int q, int m);
FamilyCode make_simplex(int q, int m);
FamilyCode make_golay_binary();
FamilyCode make_golay_ternary();
FamilyCode make_reed_solomon(int q, int n, int k,
                             const std::optional<std::vector<int>>& points = {});
FamilyCode make_reed_muller1(int m);
FamilyCode make_kasami(int m);
FamilyCode make_block_diagonal(int q, int m, int u);
FamilyCode make_repetition(int q, int n);

// Parity-check matrix with one column per projective point of F_q^m (first
// nonzero entry 1), columns in lexicographic order.  Shared by hamming,
// simplex and block_diagonal.
Matrix projective_columns(FieldPtr f, int m);

}  // namespace covbound
