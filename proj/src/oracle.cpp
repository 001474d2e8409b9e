#include "covbound/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "covbound/config.hpp"
#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/field.hpp"

namespace covbound {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t capped_space(int q, int n) {
  field_make(q);  // validates q
  if (n < 1) fail(Errc::bad_params, "need n >= 1");
  std::uint64_t space = pow_u64(q, n);
  if (space > oracle_cap())
    fail(Errc::budget_exceeded,
         "oracle search space " + std::to_string(space) +
             " exceeds cap " + std::to_string(oracle_cap()));
  return space;
}

std::vector<Word> all_words(int q, int n, std::uint64_t space) {
  std::vector<Word> words;
  words.reserve(space);
  for (std::uint64_t v = 0; v < space; ++v)
    words.push_back(index_to_word(v, q, n));
  return words;
}

Code make_witness(int q, int n, const std::vector<Word>& words,
                  std::vector<std::uint64_t> picked) {
  std::sort(picked.begin(), picked.end());
  Code c;
  c.f = field_make(q);
  c.n = n;
  for (std::uint64_t v : picked) c.words.push_back(words[v]);
  return c;
}

// ---- exact_A: maximum clique ----

struct CliqueSearch {
  const std::vector<std::vector<std::uint8_t>>& adj;
  std::uint64_t nodes = 0;
  std::size_t best_size = 0;
  std::vector<std::uint64_t> best;  // vertices beyond the anchor 0
  std::vector<std::uint64_t> cur;

  void expand(const std::vector<std::uint64_t>& cand) {
    ++nodes;
    // Greedy coloring: vertices in the same class are pairwise non-adjacent,
    // so a clique takes at most one from each; class count bounds the gain.
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<std::uint64_t> order;
    std::vector<int> color;
    for (std::uint64_t v : cand) {
      std::size_t cls = 0;
      for (; cls < classes.size(); ++cls) {
        bool conflict = false;
        for (std::uint64_t u : classes[cls])
          if (adj[v][u]) {
            conflict = true;
            break;
          }
        if (!conflict) break;
      }
      if (cls == classes.size()) classes.emplace_back();
      classes[cls].push_back(v);
    }
    for (std::size_t cls = 0; cls < classes.size(); ++cls)
      for (std::uint64_t v : classes[cls]) {
        order.push_back(v);
        color.push_back(static_cast<int>(cls) + 1);
      }

    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + color[i] <= best_size) return;  // colors ascend with i
      std::uint64_t v = order[i];
      cur.push_back(v);
      if (cur.size() > best_size) {
        best_size = cur.size();
        best = cur;
      }
      std::vector<std::uint64_t> next;
      for (int j = 0; j < i; ++j)
        if (adj[v][order[j]]) next.push_back(order[j]);
      if (!next.empty()) expand(next);
      cur.pop_back();
    }
  }
};

// ---- exact_K: minimum ball cover ----

struct CoverSearch {
  std::uint64_t space = 0;
  const std::vector<std::vector<std::uint64_t>>& ball;  // sorted members
  std::uint64_t nodes = 0;
  std::size_t best_size = 0;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> cur;

  std::uint64_t fresh(std::uint64_t center,
                      const std::vector<int>& covered) const {
    std::uint64_t cnt = 0;
    for (std::uint64_t p : ball[center])
      if (!covered[p]) ++cnt;
    return cnt;
  }

  void descend(std::vector<int>& covered, std::uint64_t uncovered) {
    ++nodes;
    if (uncovered == 0) {
      if (cur.size() < best_size) {
        best_size = cur.size();
        best = cur;
      }
      return;
    }
    // Floor: even the best remaining center covers at most `top` new points.
    std::uint64_t top = 0;
    for (std::uint64_t v = 0; v < space; ++v)
      top = std::max(top, fresh(v, covered));
    if (top == 0) return;
    std::uint64_t floor = (uncovered + top - 1) / top;
    if (cur.size() + floor >= best_size) return;

    std::uint64_t lowest = 0;
    while (covered[lowest]) ++lowest;
    // Any cover must cover `lowest`, so some center lies in its ball.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cands;
    for (std::uint64_t v : ball[lowest])
      cands.push_back({fresh(v, covered), v});
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, v] : cands) {
      if (gain == 0) continue;
      std::vector<std::uint64_t> newly;
      for (std::uint64_t p : ball[v])
        if (!covered[p]) {
          covered[p] = 1;
          newly.push_back(p);
        }
      cur.push_back(v);
      descend(covered, uncovered - newly.size());
      cur.pop_back();
      for (std::uint64_t p : newly) covered[p] = 0;
    }
  }
};

}  // namespace

OracleResult exact_A(int q, int n, int d) {
  auto start = Clock::now();
  const std::uint64_t space = capped_space(q, n);
  if (d < 1) fail(Errc::bad_params, "need d >= 1");
  std::vector<Word> words = all_words(q, n, space);

  OracleResult out;
  if (d == 1) {
    out.value = space;
    std::vector<std::uint64_t> all(space);
    std::iota(all.begin(), all.end(), 0);
    out.witness = make_witness(q, n, words, all);
    out.ms = elapsed_ms(start);
    return out;
  }

  check_budget(space * space, "oracle distance table");
  std::vector<std::vector<std::uint8_t>> adj(
      space, std::vector<std::uint8_t>(space, 0));
  for (std::uint64_t a = 0; a < space; ++a)
    for (std::uint64_t b = a + 1; b < space; ++b) {
      std::uint8_t e = hamming_distance(words[a], words[b]) >= d ? 1 : 0;
      adj[a][b] = e;
      adj[b][a] = e;
    }

  CliqueSearch search{adj};
  // Greedy incumbent: lexicographic scan keeping pairwise-compatible words.
  std::vector<std::uint64_t> greedy;
  for (std::uint64_t v = 1; v < space; ++v) {
    bool ok = adj[0][v];
    for (std::uint64_t u : greedy) ok = ok && adj[v][u];
    if (ok) greedy.push_back(v);
  }
  search.best_size = greedy.size();
  search.best = greedy;

  std::vector<std::uint64_t> cand;
  for (std::uint64_t v = 1; v < space; ++v)
    if (adj[0][v]) cand.push_back(v);
  if (!cand.empty()) search.expand(cand);

  std::vector<std::uint64_t> picked = search.best;
  picked.push_back(0);  // the anchor
  out.value = picked.size();
  out.nodes = search.nodes;
  out.witness = make_witness(q, n, words, picked);

  if (out.witness.size() != out.value ||
      (out.value >= 2 && min_distance(out.witness) < d))
    fail(Errc::self_check_failed, "clique witness failed re-verification");
  out.ms = elapsed_ms(start);
  return out;
}

OracleResult exact_K(int q, int n, int R) {
  auto start = Clock::now();
  const std::uint64_t space = capped_space(q, n);
  if (R < 0) fail(Errc::bad_params, "need R >= 0");
  std::vector<Word> words = all_words(q, n, space);

  OracleResult out;
  if (R >= n) {
    out.value = 1;
    out.witness = make_witness(q, n, words, {0});
    out.ms = elapsed_ms(start);
    return out;
  }

  check_budget(space * space, "oracle ball table");
  std::vector<std::vector<std::uint64_t>> ball(space);
  for (std::uint64_t a = 0; a < space; ++a)
    for (std::uint64_t b = 0; b < space; ++b)
      if (hamming_distance(words[a], words[b]) <= R) ball[a].push_back(b);

  CoverSearch search{space, ball};
  // Greedy incumbent: max fresh coverage, ties to the smallest index.
  {
    std::vector<int> covered(space, 0);
    std::uint64_t left = space;
    std::vector<std::uint64_t> greedy;
    while (left > 0) {
      std::uint64_t best_gain = 0, best_v = 0;
      for (std::uint64_t v = 0; v < space; ++v) {
        std::uint64_t gain = search.fresh(v, covered);
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      greedy.push_back(best_v);
      for (std::uint64_t p : ball[best_v])
        if (!covered[p]) {
          covered[p] = 1;
          --left;
        }
    }
    search.best_size = greedy.size();
    search.best = greedy;
  }

  // Anchor one center at 0 (translating any cover moves a center to 0).
  {
    std::vector<int> covered(space, 0);
    for (std::uint64_t p : ball[0]) covered[p] = 1;
    search.cur.push_back(0);
    search.descend(covered, space - ball[0].size());
  }

  out.value = search.best_size;
  out.nodes = search.nodes;
  out.witness = make_witness(q, n, words, search.best);

  RadiusResult rr = covering_radius(out.witness, RadiusMethod::exhaustive);
  if (out.witness.size() != out.value || rr.radius > R)
    fail(Errc::self_check_failed, "cover witness failed re-verification");
  out.ms = elapsed_ms(start);
  return out;
}

}  // namespace covbound
