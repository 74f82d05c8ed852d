#pragma once

// Naive reference implementations used only by the tests. They work on a
// plain adjacency matrix and enumerate subsets directly from the
// definitions, so they share no code with the bitset checkers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ectf/ectf.hpp"

namespace oracle {

using Adj = std::vector<std::vector<bool>>;
using Set = std::vector<std::uint32_t>;

inline Adj matrix(const ectf::Graph& g) {
  Adj a(g.order(), std::vector<bool>(g.order(), false));
  for (std::uint32_t u = 0; u < g.order(); ++u)
    for (std::uint32_t v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

// Calls f on every subset of {0..n-1} of size exactly k, in lexicographic
// order; stops early when f returns false.
inline bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const Set&)>& f) {
  Set s;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t from) -> bool {
    if (s.size() == k) return f(s);
    for (std::uint32_t v = from; v < n; ++v) {
      s.push_back(v);
      const bool go = rec(v + 1);
      s.pop_back();
      if (!go) return false;
    }
    return true;
  };
  return rec(0);
}

inline bool independent(const Adj& a, const Set& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (a[s[i]][s[j]]) return false;
  return true;
}

inline std::size_t common_count(const Adj& a, const Set& s) {
  std::size_t c = 0;
  for (std::uint32_t v = 0; v < a.size(); ++v) {
    bool all = true;
    for (auto x : s) all = all && a[v][x];
    c += all;
  }
  return c;
}

inline bool triangle_free(const Adj& a) {
  return for_each_subset(a.size(), 3, [&](const Set& s) { return !(a[s[0]][s[1]] && a[s[0]][s[2]] && a[s[1]][s[2]]); });
}

inline bool twin_free(const Adj& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a[x] == a[y]) return false;
  return true;
}

inline bool anti_triangle(const Adj& a) {
  return !for_each_subset(a.size(), 3, [&](const Set& s) { return !independent(a, s); });
}

inline bool adj_k(const Adj& a, std::size_t k) {
  for (std::size_t size = 1; size <= k; ++size)
    if (!for_each_subset(a.size(), size, [&](const Set& s) { return !independent(a, s) || common_count(a, s) > 0; }))
      return false;
  return true;
}

inline bool maximal_triangle_free(const Adj& a) { return triangle_free(a) && adj_k(a, 2); }

// Some v outside A adjacent to exactly the members of A flagged in mask.
inline bool realized(const Adj& a, const Set& A, std::size_t mask) {
  for (std::uint32_t v = 0; v < a.size(); ++v) {
    if (std::find(A.begin(), A.end(), v) != A.end()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < A.size() && ok; ++i) ok = a[v][A[i]] == (((mask >> i) & 1U) != 0);
    if (ok) return true;
  }
  return false;
}

inline Set masked(const Set& A, std::size_t mask) {
  Set b;
  for (std::size_t i = 0; i < A.size(); ++i)
    if ((mask >> i) & 1U) b.push_back(A[i]);
  return b;
}

inline bool e_k(const Adj& a, std::size_t k) {
  for (std::size_t size = 1; size <= k; ++size) {
    const bool ok = for_each_subset(a.size(), size, [&](const Set& A) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask)
        if (independent(a, masked(A, mask)) && !realized(a, A, mask)) return false;
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool e_k_prime(const Adj& a, std::size_t k) {
  const bool ext = for_each_subset(a.size(), k, [&](const Set& A) {
    if (!independent(a, A)) return true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask)
      if (!realized(a, A, mask)) return false;
    return true;
  });
  if (!ext) return false;
  // Every independent set below size k lies in an independent k-set.
  for (std::size_t size = 1; size < k; ++size) {
    const bool ok = for_each_subset(a.size(), size, [&](const Set& s) {
      if (!independent(a, s)) return true;
      return !for_each_subset(a.size(), k, [&](const Set& big) {
        if (!independent(a, big)) return true;
        return !std::includes(big.begin(), big.end(), s.begin(), s.end());
      });
    });
    if (!ok) return false;
  }
  return true;
}

inline std::optional<std::size_t> mu_k(const Adj& a, std::size_t k) {
  std::optional<std::size_t> best;
  for_each_subset(a.size(), k, [&](const Set& s) {
    if (independent(a, s)) {
      const auto c = common_count(a, s);
      if (!best || c < *best) best = c;
    }
    return true;
  });
  return best;
}

// Random maximal triangle-free graph on n vertices: add edges in a random
// order whenever they keep the graph triangle-free. The result has
// diameter at most 2.
inline ectf::Graph random_maximal_triangle_free(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), gen);
  Adj a(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (auto [u, v] : pairs) {
    bool makes_triangle = false;
    for (std::size_t w = 0; w < n && !makes_triangle; ++w) makes_triangle = a[u][w] && a[v][w];
    if (makes_triangle) continue;
    a[u][v] = a[v][u] = true;
    edges.emplace_back(u, v);
  }
  return ectf::graph_from_edges(n, edges);
}

inline ectf::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(gen)) edges.emplace_back(u, v);
  return ectf::graph_from_edges(n, edges);
}

// All-triples shattered oracle for matrices: every 3 rows (columns) show
// each of the 8 patterns or its complement somewhere.
inline bool shattered_matrix(const ectf::BitMatrix& m) {
  if (m.rows() < 3 || m.cols() < 3) return false;
  auto check = [](std::size_t lines, std::size_t across, auto at) {
    return for_each_subset(lines, 3, [&](const Set& t) {
      std::vector<bool> seen(8, false);
      for (std::size_t c = 0; c < across; ++c)
        seen[at(t[0], c) * 4 + at(t[1], c) * 2 + at(t[2], c)] = true;
      for (int p = 0; p < 4; ++p)
        if (!seen[p] && !seen[7 - p]) return false;
      return true;
    });
  };
  return check(m.rows(), m.cols(), [&](std::size_t r, std::size_t c) { return int(m.at(r, c)); }) &&
         check(m.cols(), m.rows(), [&](std::size_t c, std::size_t r) { return int(m.at(r, c)); });
}

// A 4-tournament is T4 or T4' exactly when it has score sequence
// (3,1,1,1) or (0,2,2,2): one vertex dominates (or is dominated by) a
// directed 3-cycle.
inline bool is_t4_or_t4p_by_scores(const ectf::Tournament& t, const std::array<std::size_t, 4>& s) {
  std::vector<int> scores;
  for (auto u : s) {
    int sc = 0;
    for (auto v : s)
      if (u != v && t.beats(u, v)) ++sc;
    scores.push_back(sc);
  }
  std::sort(scores.begin(), scores.end());
  return scores == std::vector<int>{1, 1, 1, 3} || scores == std::vector<int>{0, 2, 2, 2};
}

inline bool shattered_tournament(const ectf::Tournament& t) {
  const std::size_t n = t.order();
  if (n < 4) return false;
  return for_each_subset(n, 3, [&](const Set& s) {
    for (std::uint32_t w = 0; w < n; ++w) {
      if (std::find(s.begin(), s.end(), w) != s.end()) continue;
      if (is_t4_or_t4p_by_scores(t, {s[0], s[1], s[2], w})) return true;
    }
    return false;
  });
}

// Brute force over all 2^n candidate centers.
inline std::optional<std::uint64_t> center(int n, std::uint64_t x, std::uint64_t y, std::uint64_t z, int a, int b,
                                           int c) {
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (std::popcount(v ^ x) <= a && std::popcount(v ^ y) <= b && std::popcount(v ^ z) <= c) return v;
  return std::nullopt;
}

}  // namespace oracle
