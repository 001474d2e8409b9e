#include "covbound/code.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "covbound/config.hpp"
#include "covbound/errors.hpp"
#include "covbound/kernels.hpp"

namespace covbound {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      fail(Errc::budget_exceeded, "q^n does not fit in 64 bits");
    r *= base;
  }
  return r;
}

int hamming_weight(const Word& w) {
  int wt = 0;
  for (Fel x : w) wt += (x != 0);
  return wt;
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size())
    fail(Errc::length_mismatch, "hamming_distance: unequal lengths");
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

std::uint64_t word_to_index(const Word& w, int q) {
  std::uint64_t idx = 0;
  for (Fel x : w) idx = idx * q + x;
  return idx;
}

Word index_to_word(std::uint64_t idx, int q, int n) {
  Word w(n, 0);
  for (int j = n - 1; j >= 0; --j) {
    w[j] = Fel(idx % q);
    idx /= q;
  }
  return w;
}

LinearCode::LinearCode(Matrix generator) : gen_(std::move(generator)) {
  if (gen_.rows < 1 || gen_.cols < 1)
    fail(Errc::bad_params, "linear code needs at least one generator row");
  if (gen_.rows > gen_.cols)
    fail(Errc::bad_params, "generator has more rows than columns");
  if (rank_of(gen_) != gen_.rows)
    fail(Errc::bad_params, "generator rows are linearly dependent");
}

const Matrix& LinearCode::parity_check() const {
  std::call_once(pc_->once, [this] {
    pc_->value = nullspace(gen_);
  });
  return *pc_->value;
}

Word LinearCode::encode(std::uint64_t message_index) const {
  const Field& f = *gen_.f;
  Word msg = index_to_word(message_index, q(), k());
  Word out(n(), 0);
  for (int i = 0; i < k(); ++i) {
    Fel m = msg[i];
    if (m == 0) continue;
    for (int j = 0; j < n(); ++j)
      out[j] = f.add(out[j], f.mul(m, gen_.at(i, j)));
  }
  return out;
}

Word LinearCode::syndrome(const Word& w) const {
  if (int(w.size()) != n()) fail(Errc::length_mismatch, "syndrome: bad length");
  const Matrix& h = parity_check();
  const Field& f = *gen_.f;
  Word s(h.rows, 0);
  for (int r = 0; r < h.rows; ++r)
    for (int j = 0; j < n(); ++j)
      s[r] = f.add(s[r], f.mul(h.at(r, j), w[j]));
  return s;
}

std::vector<Word> materialize(const LinearCode& c) {
  std::uint64_t count = pow_u64(c.q(), c.k());
  check_budget(count, "materialize");
  std::vector<Word> words;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) words.push_back(c.encode(i));
  return words;
}

Code as_code(const LinearCode& c) {
  Code out;
  out.f = c.field();
  out.n = c.n();
  out.words = materialize(c);
  out.linear_hint = true;
  return out;
}

int min_distance(const LinearCode& c) {
  // Linear: minimum distance = minimum nonzero codeword weight.
  auto hist = weight_distribution(c);
  for (int w = 1; w <= c.n(); ++w)
    if (hist[w] > 0) return w;
  fail(Errc::trivial_code, "code has a repeated codeword (rank bug)");
}

int min_distance(const Code& c) {
  if (c.words.size() < 2)
    fail(Errc::trivial_code, "minimum distance needs at least two codewords");
  std::uint64_t pairs = c.words.size() * (c.words.size() - 1) / 2;
  check_budget(pairs, "min_distance (pairwise)");
  PackedCode pc = pack_words(c.words, c.f->q(), c.n);
  return kernels::pairwise_min_distance(pc);
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
  check_budget(pow_u64(c.q(), c.k()), "weight_distribution");
  return kernels::weight_histogram(c);
}

std::vector<std::uint64_t> weight_distribution(const Code& c) {
  std::vector<std::uint64_t> hist(c.n + 1, 0);
  for (const Word& w : c.words) ++hist[hamming_weight(w)];
  return hist;
}

LinearCode dual(const LinearCode& c) {
  if (c.k() == c.n())
    fail(Errc::bad_params, "dual of the full space has dimension 0");
  return LinearCode(nullspace(c.generator()));
}

LinearCode extend_product(const LinearCode& c, int s) {
  if (s < 0) fail(Errc::bad_params, "extend_product: negative extension");
  if (s == 0) return c;
  const Matrix& g = c.generator();
  Matrix ext(g.f, g.rows + s, g.cols + s);
  for (int r = 0; r < g.rows; ++r)
    for (int col = 0; col < g.cols; ++col) ext.at(r, col) = g.at(r, col);
  for (int i = 0; i < s; ++i) ext.at(g.rows + i, g.cols + i) = 1;
  return LinearCode(std::move(ext));
}

Code extend_product(const Code& c, int s) {
  if (s < 0) fail(Errc::bad_params, "extend_product: negative extension");
  std::uint64_t suffixes = pow_u64(c.f->q(), s);
  check_budget(c.size() * suffixes, "extend_product");
  Code out;
  out.f = c.f;
  out.n = c.n + s;
  out.linear_hint = false;
  out.words.reserve(c.size() * suffixes);
  for (const Word& w : c.words)
    for (std::uint64_t t = 0; t < suffixes; ++t) {
      Word nw = w;
      Word suffix = index_to_word(t, c.f->q(), s);
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      out.words.push_back(std::move(nw));
    }
  return out;
}

namespace {
Code subfield_filter(const Code& c) {
  if (c.f->degree() < 2)
    fail(Errc::not_an_extension, "field is already prime");
  int p = c.f->p();
  Code out;
  out.f = field_make(p);
  out.n = c.n;
  for (const Word& w : c.words) {
    bool ok = true;
    for (Fel x : w)
      if (x >= p) {
        ok = false;
        break;
      }
    if (ok) out.words.push_back(w);
  }
  return out;
}
}  // namespace

Code subfield_subcode(const LinearCode& c) {
  Code sub = subfield_filter(as_code(c));
  sub.linear_hint = true;  // closed under prime-subfield combinations
  return sub;
}

Code subfield_subcode(const Code& c) { return subfield_filter(c); }

namespace {
SingletonDefect defect_from(std::uint64_t size, int q, int n, int d) {
  // Largest t with q^t <= |C|.
  int t = 0;
  std::uint64_t power = 1;
  while (power <= size / q) {
    power *= q;
    ++t;
  }
  SingletonDefect out;
  out.rounded = (power != size);
  out.value = n + 1 - d - t;
  return out;
}
}  // namespace

SingletonDefect singleton_defect(const LinearCode& c) {
  return defect_from(pow_u64(c.q(), c.k()), c.q(), c.n(), min_distance(c));
}

SingletonDefect singleton_defect(const Code& c) {
  return defect_from(c.size(), c.f->q(), c.n, min_distance(c));
}

const FieldPtr& LoadedCode::field() const {
  return linear ? linear->field() : words->f;
}

int LoadedCode::n() const { return linear ? linear->n() : words->n; }

std::uint64_t LoadedCode::size() const {
  return linear ? pow_u64(linear->q(), linear->k()) : words->size();
}

Code LoadedCode::materialized() const {
  return linear ? as_code(*linear) : *words;
}

}  // namespace covbound
