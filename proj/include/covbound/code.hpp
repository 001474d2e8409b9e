#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "covbound/matrix.hpp"

namespace covbound {

// A codeword: n field-element digits, digit 0 leftmost.  Lexicographic order
// on words matches numeric order on their indices (digit 0 most significant).
using Word = std::vector<Fel>;

std::uint64_t pow_u64(std::uint64_t base, int exp);  // overflow-checked

int hamming_weight(const Word& w);
int hamming_distance(const Word& a, const Word& b);  // Errc::length_mismatch

std::uint64_t word_to_index(const Word& w, int q);
Word index_to_word(std::uint64_t idx, int q, int n);

// Explicit code: a duplicate-free list of equal-length words.
struct Code {
  FieldPtr f;
  int n = 0;
  std::vector<Word> words;
  bool linear_hint = false;  // true when materialized from a linear code

  std::uint64_t size() const { return words.size(); }
};

// Linear [n, k] code given by a full-rank generator matrix.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);  // Errc::bad_params if rank < rows

  const FieldPtr& field() const { return gen_.f; }
  int q() const { return gen_.f->q(); }
  int n() const { return gen_.cols; }
  int k() const { return gen_.rows; }
  const Matrix& generator() const { return gen_; }

  // (n-k) x n full-rank matrix H with G H^T = 0; derived lazily, cached.
  const Matrix& parity_check() const;

  Word encode(std::uint64_t message_index) const;
  Word syndrome(const Word& w) const;  // H w^T as an (n-k)-digit word

 private:
  struct LazyParity {
    std::once_flag once;
    std::optional<Matrix> value;
  };
  Matrix gen_;
  // Shared across copies so the parity check is derived at most once.
  mutable std::shared_ptr<LazyParity> pc_ = std::make_shared<LazyParity>();
};

// All q^k codewords in message-index order (budget-gated).
std::vector<Word> materialize(const LinearCode& c);
Code as_code(const LinearCode& c);

// Minimum Hamming distance.  Linear path enumerates q^k codeword weights;
// explicit path compares all pairs.  Errc::trivial_code when |C| < 2.
int min_distance(const LinearCode& c);
int min_distance(const Code& c);

// Weight enumerator A_0..A_n.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);
std::vector<std::uint64_t> weight_distribution(const Code& c);

LinearCode dual(const LinearCode& c);

// C x F_q^s: appends s unconstrained coordinates.  Preserves minimum distance
// for s = 0 trivially and covering radius for every s; linear codes extend
// symbolically, explicit codes materialize all |C| * q^s words.
LinearCode extend_product(const LinearCode& c, int s);
Code extend_product(const Code& c, int s);

// Codewords with every coordinate in the prime subfield, re-read over GF(p).
// Errc::not_an_extension when the field is already prime.
Code subfield_subcode(const LinearCode& c);
Code subfield_subcode(const Code& c);

// n + 1 - d - log_q|C|; `rounded` is set when log_q|C| is not an integer
// (the floor is used).
struct SingletonDefect {
  int value = 0;
  bool rounded = false;
};
SingletonDefect singleton_defect(const LinearCode& c);
SingletonDefect singleton_defect(const Code& c);

// ---- code files ----
//
// Line 1: `q=<int> n=<int> kind=<linear|explicit>`; then one row per line
// (generator rows for `linear`, codewords for `explicit`), written as base-q
// digits 0-9a-z (lowercase; q <= 36), no separators, LF line endings.  Lines
// starting with `#` are comments.  Duplicate codewords and dependent
// generator rows are rejected.

struct LoadedCode {
  std::optional<LinearCode> linear;
  std::optional<Code> words;

  bool is_linear() const { return linear.has_value(); }
  const FieldPtr& field() const;
  int q() const { return field()->q(); }
  int n() const;
  std::uint64_t size() const;
  Code materialized() const;  // budget-gated for linear
};

LoadedCode parse_code(const std::string& text);
LoadedCode read_code_file(const std::string& path);
std::string format_code(const LinearCode& c);
std::string format_code(const Code& c);
void write_code_file(const std::string& path, const std::string& formatted);

}  // namespace covbound
