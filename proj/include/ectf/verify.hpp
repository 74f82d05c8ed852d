#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ectf/families.hpp"
#include "ectf/graph.hpp"
#include "ectf/isomorphism.hpp"
#include "ectf/parallel.hpp"
#include "ectf/rng.hpp"

namespace ectf {

// Structured certificate attached to a verdict. For negative verdicts it is
// a counterexample that revalidate() can re-check against the graph.
struct Witness {
  enum class Kind {
    triangle,            // a: three mutually adjacent vertices
    twins,               // a: x, y with N(x) = N(y)
    anti_triangle,       // a: three pairwise nonadjacent vertices (positive)
    no_common_neighbor,  // a: independent set without a common neighbor
    extension,           // a: set A, b: independent B in A with no realizing vertex
    unextendable,        // a: independent set in no independent set of size k
    circular,            // n: the graph is isomorphic to O_{3n-1}
  };

  Kind kind = Kind::triangle;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  int k = 0;
  int n = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline const char* to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::triangle: return "triangle";
    case Witness::Kind::twins: return "twins";
    case Witness::Kind::anti_triangle: return "anti_triangle";
    case Witness::Kind::no_common_neighbor: return "no_common_neighbor";
    case Witness::Kind::extension: return "extension";
    case Witness::Kind::unextendable: return "unextendable";
    case Witness::Kind::circular: return "circular";
  }
  return "unknown";
}

struct CheckResult {
  bool holds = false;
  std::optional<Witness> witness;
  explicit operator bool() const { return holds; }
};

namespace verify_detail {

inline CheckResult pass() { return {true, std::nullopt}; }
inline CheckResult fail(Witness w) { return {false, std::move(w)}; }

inline bool independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

// Word buffer for one DFS level.
using Words = std::vector<Word>;

// Clears bits 0..v (inclusive) of s.
inline void clear_through(std::span<Word> s, std::size_t v) {
  const std::size_t wi = v / kWordBits;
  for (std::size_t i = 0; i < wi; ++i) s[i] = 0;
  const std::size_t r = v % kWordBits;
  s[wi] &= (r == kWordBits - 1) ? Word{0} : (~Word{0} << (r + 1));
}

// Nonempty after removing the vertices of `excluded`.
inline bool any_except(std::span<const Word> s, std::span<const Vertex> excluded) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    Word val = s[w];
    if (val == 0) continue;
    for (Vertex x : excluded)
      if (x / kWordBits == w) val &= ~(Word{1} << (x % kWordBits));
    if (val != 0) return true;
  }
  return false;
}

// Nonempty (a & b) or (a & ~b) after removing `excluded`. a must be tail-clean.
inline bool any_and_except(std::span<const Word> a, std::span<const Word> b, bool complement,
                           std::span<const Vertex> excluded) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    Word val = a[w] & (complement ? ~b[w] : b[w]);
    if (val == 0) continue;
    for (Vertex x : excluded)
      if (x / kWordBits == w) val &= ~(Word{1} << (x % kWordBits));
    if (val != 0) return true;
  }
  return false;
}

// Vertices nonadjacent to v with larger index.
inline Words later_non_neighbors(const Graph& g, Vertex v) {
  Words out(g.row_words());
  auto row = g.row(v);
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = ~row[w];
  out.back() &= tail_mask(g.order());
  clear_through(out, v);
  return out;
}

}  // namespace verify_detail

// --- basic properties -------------------------------------------------------

// For each edge uv, N(u) and N(v) are disjoint. Witness: first triangle
// u < v < w in lexicographic order.
inline CheckResult is_triangle_free(const Graph& g, const ExecOptions& opt = {}) {
  auto found = find_first(g.order(), opt, [&](std::size_t ui) -> std::optional<Witness> {
    const auto u = static_cast<Vertex>(ui);
    auto nu = g.row(u);
    const std::size_t v = bits::next_set(nu, ui + 1, g.order());
    for (std::size_t vi = v; vi < g.order(); vi = bits::next_set(nu, vi + 1, g.order())) {
      auto nv = g.row(static_cast<Vertex>(vi));
      for (std::size_t w = vi / kWordBits; w < nu.size(); ++w) {
        Word common = nu[w] & nv[w];
        if (w == vi / kWordBits) {
          const std::size_t r = vi % kWordBits;
          common &= (r == kWordBits - 1) ? Word{0} : (~Word{0} << (r + 1));
        }
        if (common != 0) {
          const auto third = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(common)));
          return Witness{Witness::Kind::triangle, {u, static_cast<Vertex>(vi), third}, {}};
        }
      }
    }
    return std::nullopt;
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

// No two vertices with equal neighborhoods. Witness: first pair x < y.
inline CheckResult is_twin_free(const Graph& g, const ExecOptions& opt = {}) {
  auto found = find_first(g.order(), opt, [&](std::size_t xi) -> std::optional<Witness> {
    auto nx = g.row(static_cast<Vertex>(xi));
    for (std::size_t yi = xi + 1; yi < g.order(); ++yi) {
      auto ny = g.row(static_cast<Vertex>(yi));
      if (std::equal(nx.begin(), nx.end(), ny.begin()))
        return Witness{Witness::Kind::twins, {static_cast<Vertex>(xi), static_cast<Vertex>(yi)}, {}};
    }
    return std::nullopt;
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

// Three pairwise nonadjacent vertices; the witness is the first such triple.
inline CheckResult has_anti_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto later = verify_detail::later_non_neighbors(g, u);
    for (std::size_t v = bits::next_set(later, 0, g.order()); v < g.order();
         v = bits::next_set(later, v + 1, g.order())) {
      auto lv = verify_detail::later_non_neighbors(g, static_cast<Vertex>(v));
      for (std::size_t w = 0; w < later.size(); ++w)
        if (Word both = later[w] & lv[w]) {
          const auto third = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(both)));
          return {true, Witness{Witness::Kind::anti_triangle, {u, static_cast<Vertex>(v), third}, {}}};
        }
    }
  }
  return {false, std::nullopt};
}

// Triangle-free and every nonadjacent pair has a common neighbor.
inline CheckResult is_maximal_triangle_free(const Graph& g, const ExecOptions& opt = {}) {
  if (auto tf = is_triangle_free(g, opt); !tf) return tf;
  auto found = find_first(g.order(), opt, [&](std::size_t ui) -> std::optional<Witness> {
    const auto u = static_cast<Vertex>(ui);
    auto later = verify_detail::later_non_neighbors(g, u);
    for (std::size_t v = bits::next_set(later, 0, g.order()); v < g.order();
         v = bits::next_set(later, v + 1, g.order()))
      if (!bits::any_and(g.row(u), g.row(static_cast<Vertex>(v))))
        return Witness{Witness::Kind::no_common_neighbor, {u, static_cast<Vertex>(v)}, {}};
    return std::nullopt;
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

// --- independent-set enumeration ----------------------------------------------

namespace verify_detail {

// Depth-first walk over independent sets S = (s_1 < ... < s_d), d <= k,
// carrying the common neighborhood of S and the candidates for s_{d+1}.
// Sets are visited in lexicographic (prefix-first) order. The visitor gets
// (S, common) for every S with |S| < k and (S, parent_common, N(last)) at
// |S| = k, where the common neighborhood is the AND of the last two.
template <class Visitor>
class IndependentWalk {
 public:
  IndependentWalk(const Graph& g, int k, Visitor& visit)
      : g_(g), k_(k), visit_(visit), levels_(static_cast<std::size_t>(k) + 1) {
    for (auto& level : levels_) {
      level.common.resize(g.row_words());
      level.cand.resize(g.row_words());
    }
    set_.reserve(static_cast<std::size_t>(k));
  }

  // Walks every set whose smallest element is `first`. Returns false if the
  // visitor asked to stop.
  bool run_from(Vertex first) {
    set_.assign(1, first);
    auto row = g_.row(first);
    if (k_ == 1) return visit_.leaf(std::span<const Vertex>(set_), {}, row, true);
    auto& top = levels_[1];
    std::copy(row.begin(), row.end(), top.common.begin());
    top.cand = later_non_neighbors(g_, first);
    return descend(1);
  }

 private:
  struct Level {
    Words common;
    Words cand;
  };

  bool descend(std::size_t depth) {
    const Level& cur = levels_[depth];
    if (!visit_.inner(std::span<const Vertex>(set_), std::span<const Word>(cur.common)))
      return false;
    const std::size_t n = g_.order();
    for (std::size_t c = bits::next_set(cur.cand, 0, n); c < n; c = bits::next_set(cur.cand, c + 1, n)) {
      const auto cv = static_cast<Vertex>(c);
      auto row = g_.row(cv);
      set_.push_back(cv);
      bool keep_going;
      if (static_cast<int>(depth) + 1 == k_) {
        keep_going = visit_.leaf(std::span<const Vertex>(set_), std::span<const Word>(cur.common), row, false);
      } else {
        Level& next = levels_[depth + 1];
        for (std::size_t w = 0; w < row.size(); ++w) {
          next.common[w] = cur.common[w] & row[w];
          next.cand[w] = cur.cand[w] & ~row[w];
        }
        clear_through(next.cand, c);
        keep_going = descend(depth + 1);
      }
      set_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  Visitor& visit_;
  std::vector<Level> levels_;
  std::vector<Vertex> set_;
};

}  // namespace verify_detail

// (Adj_k): every independent set of size 1..k has a common neighbor.
// Witness: first uncovered independent set in lexicographic order.
inline CheckResult satisfies_adj_k(const Graph& g, int k, const ExecOptions& opt = {}) {
  if (k < 1) throw ParameterError("satisfies_adj_k requires k >= 1");
  auto found = find_first(g.order(), opt, [&](std::size_t first) -> std::optional<Witness> {
    struct Visitor {
      std::optional<Witness> bad;
      int k;
      bool inner(std::span<const Vertex> s, std::span<const Word> common) {
        if (bits::any(common)) return true;
        bad = Witness{Witness::Kind::no_common_neighbor, {s.begin(), s.end()}, {}, k};
        return false;
      }
      bool leaf(std::span<const Vertex> s, std::span<const Word> common, std::span<const Word> row,
                bool root) {
        if (root ? bits::any(row) : bits::any_and(common, row)) return true;
        bad = Witness{Witness::Kind::no_common_neighbor, {s.begin(), s.end()}, {}, k};
        return false;
      }
    } visitor{std::nullopt, k};
    verify_detail::IndependentWalk walk(g, k, visitor);
    walk.run_from(static_cast<Vertex>(first));
    return visitor.bad;
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

// --- multiplicity -------------------------------------------------------------

struct MultiplicityResult {
  int k = 0;
  std::optional<std::size_t> value;  // absent: no independent k-set exists
  std::vector<Vertex> witness;       // an independent k-set achieving value
  bool sampled = false;              // value is an upper bound from sampling
  std::size_t samples = 0;
};

// mu_k: minimum common-neighbor count over independent k-sets, with the
// lexicographically first minimizer.
inline MultiplicityResult multiplicity(const Graph& g, int k, const ExecOptions& opt = {}) {
  if (k < 1) throw ParameterError("multiplicity requires k >= 1");
  struct Best {
    std::optional<std::size_t> value;
    std::vector<Vertex> witness;
  };
  auto per_first = map_indexed(g.order(), opt, [&](std::size_t first) -> Best {
    struct Visitor {
      Best best;
      bool inner(std::span<const Vertex>, std::span<const Word>) { return true; }
      bool leaf(std::span<const Vertex> s, std::span<const Word> common, std::span<const Word> row,
                bool root) {
        const std::size_t c = root ? bits::count(row) : bits::count_and(common, row);
        if (!best.value || c < *best.value) {
          best.value = c;
          best.witness.assign(s.begin(), s.end());
        }
        return c > 0;
      }
    } visitor;
    verify_detail::IndependentWalk walk(g, k, visitor);
    walk.run_from(static_cast<Vertex>(first));
    return std::move(visitor.best);
  });
  MultiplicityResult out;
  out.k = k;
  for (auto& b : per_first)
    if (b.value && (!out.value || *b.value < *out.value)) {
      out.value = b.value;
      out.witness = std::move(b.witness);
    }
  return out;
}

// Seeded estimate: the minimum over `samples` uniformly drawn k-subsets
// that happen to be independent. The value is an upper bound on mu_k.
inline MultiplicityResult multiplicity_sampled(const Graph& g, int k, std::size_t samples,
                                               std::uint64_t seed) {
  if (k < 1) throw ParameterError("multiplicity requires k >= 1");
  MultiplicityResult out;
  out.k = k;
  out.sampled = true;
  out.samples = samples;
  if (g.order() < static_cast<std::size_t>(k)) return out;
  Rng rng(seed);
  std::vector<Vertex> s;
  for (std::size_t t = 0; t < samples; ++t) {
    s.clear();
    while (s.size() < static_cast<std::size_t>(k)) {
      const auto v = static_cast<Vertex>(rng.below(g.order()));
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    if (!verify_detail::independent(g, s)) continue;
    const std::size_t c = common_neighbors(g, s).count();
    if (!out.value || c < *out.value || (c == *out.value && s < out.witness)) {
      out.value = c;
      out.witness = s;
    }
  }
  return out;
}

// --- extension properties -----------------------------------------------------

namespace verify_detail {

// Definitional (E_k) search over all sets A with |A| <= k whose smallest
// element is `first`. For A = (a_0 < ... < a_{d-1}) and a mask over A, the
// region is the set of vertices adjacent to the masked members and to none
// of the others; the mask is live while the masked members are independent.
class ExtensionWalk {
 public:
  ExtensionWalk(const Graph& g, int k) : g_(g), k_(k) {
    regions_.resize(static_cast<std::size_t>(k));
    live_.resize(static_cast<std::size_t>(k));
    for (std::size_t d = 0; d < regions_.size(); ++d) {
      regions_[d].assign((std::size_t{1} << (d + 1)) * g.row_words(), 0);
      live_[d].assign(std::size_t{1} << (d + 1), 0);
    }
  }

  std::optional<Witness> run_from(Vertex first) {
    set_.assign(1, first);
    const std::size_t words = g_.row_words();
    auto row = g_.row(first);
    auto& r = regions_[0];
    for (std::size_t w = 0; w < words; ++w) {
      r[w] = ~row[w];
      r[words + w] = row[w];
    }
    r[words - 1] &= tail_mask(g_.order());
    live_[0][0] = live_[0][1] = 1;
    return descend(0);
  }

 private:
  std::span<const Word> region(std::size_t level, std::size_t mask) const {
    const std::size_t words = g_.row_words();
    return {regions_[level].data() + mask * words, words};
  }

  Witness failure(std::size_t mask) const {
    Witness w{Witness::Kind::extension, set_, {}, k_};
    for (std::size_t i = 0; i < set_.size(); ++i)
      if (mask & (std::size_t{1} << i)) w.b.push_back(set_[i]);
    return w;
  }

  // Can vertex c join the masked part of A and keep it independent?
  bool joins_independently(std::size_t mask, Vertex c) const {
    for (std::size_t i = 0; i < set_.size(); ++i)
      if ((mask & (std::size_t{1} << i)) && g_.adjacent(set_[i], c)) return false;
    return true;
  }

  // `level` = |A| - 1; regions for A are materialized at regions_[level].
  std::optional<Witness> descend(std::size_t level) {
    const std::size_t masks = std::size_t{1} << (level + 1);
    for (std::size_t mask = 0; mask < masks; ++mask)
      if (live_[level][mask] && !any_except(region(level, mask), set_)) return failure(mask);
    if (static_cast<int>(level) + 1 == k_) return std::nullopt;

    const std::size_t n = g_.order();
    const std::size_t words = g_.row_words();
    const bool leaf = static_cast<int>(level) + 2 == k_;
    for (std::size_t c = set_.back() + std::size_t{1}; c < n; ++c) {
      const auto cv = static_cast<Vertex>(c);
      auto row = g_.row(cv);
      if (leaf) {
        set_.push_back(cv);
        // Masks of the child in increasing order: mask < masks leaves c out.
        for (std::size_t child = 0; child < 2 * masks; ++child) {
          const std::size_t parent = child & (masks - 1);
          if (!live_[level][parent]) continue;
          const bool with_c = child >= masks;
          if (with_c && !joins_independently(parent, cv)) continue;
          if (!any_and_except(region(level, parent), row, !with_c, set_)) {
            auto w = failure(child);
            set_.pop_back();
            return w;
          }
        }
        set_.pop_back();
        continue;
      }
      auto& next = regions_[level + 1];
      auto& next_live = live_[level + 1];
      for (std::size_t parent = 0; parent < masks; ++parent) {
        auto src = region(level, parent);
        Word* without = next.data() + parent * words;
        Word* with = next.data() + (parent + masks) * words;
        for (std::size_t w = 0; w < words; ++w) {
          without[w] = src[w] & ~row[w];
          with[w] = src[w] & row[w];
        }
        next_live[parent] = live_[level][parent];
        next_live[parent + masks] = live_[level][parent] && joins_independently(parent, cv);
      }
      set_.push_back(cv);
      auto found = descend(level + 1);
      set_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int k_;
  std::vector<Words> regions_;
  std::vector<std::vector<std::uint8_t>> live_;
  std::vector<Vertex> set_;
};

}  // namespace verify_detail

// (E_k), checked from the definition: for every A with |A| <= k and every
// independent B in A, some vertex outside A is adjacent to all of B and to
// none of A \ B. Witness: first failing (A, B), A in lexicographic order
// and B by increasing membership mask over A.
inline CheckResult satisfies_e_k(const Graph& g, int k, const ExecOptions& opt = {}) {
  if (k < 1) throw ParameterError("satisfies_e_k requires k >= 1");
  if (g.order() == 0) return verify_detail::pass();
  auto found = find_first(g.order(), opt, [&](std::size_t first) {
    verify_detail::ExtensionWalk walk(g, k);
    return walk.run_from(static_cast<Vertex>(first));
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

namespace verify_detail {

// Some independent set of size `need` inside `cand` (tail-clean words).
inline bool has_independent_subset(const Graph& g, std::span<const Word> cand, int need) {
  if (need <= 0) return true;
  const std::size_t n = g.order();
  if (need == 1) return bits::any(cand);
  Words next(cand.size());
  for (std::size_t c = bits::next_set(cand, 0, n); c < n; c = bits::next_set(cand, c + 1, n)) {
    auto row = g.row(static_cast<Vertex>(c));
    for (std::size_t w = 0; w < next.size(); ++w) next[w] = cand[w] & ~row[w];
    clear_through(next, c);
    if (has_independent_subset(g, next, need - 1)) return true;
  }
  return false;
}

}  // namespace verify_detail

// (E_k'): for every independent A of size exactly k and every B in A, a
// vertex outside A is adjacent to all of B and none of A \ B; and every
// independent set of size < k lies in an independent set of size k.
// Checked independently of satisfies_e_k; the two must agree for k >= 2.
inline CheckResult satisfies_e_k_prime(const Graph& g, int k, const ExecOptions& opt = {}) {
  if (k < 2) throw ParameterError("satisfies_e_k_prime requires k >= 2");
  const std::size_t n = g.order();
  auto found = find_first(n, opt, [&](std::size_t first) -> std::optional<Witness> {
    struct Visitor {
      const Graph& g;
      int k;
      std::optional<Witness> bad;
      verify_detail::Words outside;

      // Independent S with |S| < k must extend to an independent k-set.
      bool inner(std::span<const Vertex> s, std::span<const Word>) {
        for (std::size_t w = 0; w < outside.size(); ++w) outside[w] = ~Word{0};
        outside.back() &= tail_mask(g.order());
        for (Vertex v : s) {
          auto row = g.row(v);
          for (std::size_t w = 0; w < outside.size(); ++w) outside[w] &= ~row[w];
          outside[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
        }
        if (verify_detail::has_independent_subset(g, outside, k - static_cast<int>(s.size())))
          return true;
        bad = Witness{Witness::Kind::unextendable, {s.begin(), s.end()}, {}, k};
        return false;
      }

      bool leaf(std::span<const Vertex> s, std::span<const Word> common,
                std::span<const Word> last_row, bool) {
        const std::size_t masks = std::size_t{1} << s.size();
        const std::size_t words = g.row_words();
        for (std::size_t mask = 0; mask < masks; ++mask) {
          bool found = false;
          if (mask == masks - 1) {
            // A is independent, so its common neighborhood avoids A.
            found = bits::any_and(common, last_row);
          }
          for (std::size_t w = 0; w < words && !found && mask != masks - 1; ++w) {
            Word val = w + 1 == words ? tail_mask(g.order()) : ~Word{0};
            for (std::size_t i = 0; i < s.size(); ++i) {
              const Word r = g.row(s[i])[w];
              val &= (mask >> i) & 1U ? r : ~r;
              const Vertex x = s[i];
              if (x / kWordBits == w) val &= ~(Word{1} << (x % kWordBits));
            }
            found = val != 0;
          }
          if (!found) {
            Witness wit{Witness::Kind::extension, {s.begin(), s.end()}, {}, k};
            for (std::size_t i = 0; i < s.size(); ++i)
              if ((mask >> i) & 1U) wit.b.push_back(s[i]);
            bad = std::move(wit);
            return false;
          }
        }
        return true;
      }
    } visitor{g, k, std::nullopt, verify_detail::Words(g.row_words())};
    verify_detail::IndependentWalk walk(g, k, visitor);
    walk.run_from(static_cast<Vertex>(first));
    return visitor.bad;
  });
  return found ? verify_detail::fail(*found) : verify_detail::pass();
}

// --- witnesses ----------------------------------------------------------------

// Re-checks that a negative witness really refutes its property on g (for
// anti_triangle: that the triple really is independent).
inline bool revalidate(const Graph& g, const Witness& w) {
  using K = Witness::Kind;
  for (Vertex v : w.a)
    if (v >= g.order()) return false;
  for (Vertex v : w.b)
    if (v >= g.order()) return false;
  switch (w.kind) {
    case K::triangle:
      return w.a.size() == 3 && g.adjacent(w.a[0], w.a[1]) && g.adjacent(w.a[0], w.a[2]) &&
             g.adjacent(w.a[1], w.a[2]);
    case K::twins: {
      if (w.a.size() != 2 || w.a[0] == w.a[1]) return false;
      auto x = g.row(w.a[0]), y = g.row(w.a[1]);
      return std::equal(x.begin(), x.end(), y.begin());
    }
    case K::anti_triangle:
      return w.a.size() == 3 && verify_detail::independent(g, w.a);
    case K::no_common_neighbor:
      return !w.a.empty() && verify_detail::independent(g, w.a) && common_neighbors(g, w.a).none();
    case K::extension: {
      if (w.a.empty() || (w.k > 0 && w.a.size() > static_cast<std::size_t>(w.k))) return false;
      std::vector<Vertex> a = w.a;
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
      for (Vertex b : w.b)
        if (!std::binary_search(a.begin(), a.end(), b)) return false;
      if (!verify_detail::independent(g, w.b)) return false;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (std::binary_search(a.begin(), a.end(), v)) continue;
        bool ok = true;
        for (Vertex x : a) {
          const bool in_b = std::find(w.b.begin(), w.b.end(), x) != w.b.end();
          if (g.adjacent(v, x) != in_b) {
            ok = false;
            break;
          }
        }
        if (ok) return false;
      }
      return true;
    }
    case K::unextendable: {
      if (!verify_detail::independent(g, w.a) || w.a.size() >= static_cast<std::size_t>(w.k))
        return false;
      Bitset outside = g.all_vertices();
      for (Vertex v : w.a) {
        for (std::size_t i = 0; i < outside.words().size(); ++i)
          outside.words()[i] &= ~g.row(v)[i];
        outside.reset(v);
      }
      return !verify_detail::has_independent_subset(g, outside.words(),
                                                    w.k - static_cast<int>(w.a.size()));
    }
    case K::circular:
      return w.n >= 1 && are_isomorphic(g, circular(w.n)).has_value();
  }
  return false;
}

// --- circular graphs and the 3ECTF characterization ---------------------------

// n such that g is isomorphic to O_{3n-1}, if any.
inline std::optional<int> recognize_circular(const Graph& g) {
  const std::size_t order = g.order();
  if ((order + 1) % 3 != 0) return std::nullopt;
  const std::size_t n = (order + 1) / 3;
  if (n == 0) return std::nullopt;
  for (Vertex v = 0; v < order; ++v)
    if (g.degree(v) != n) return std::nullopt;
  if (are_isomorphic(g, circular(static_cast<int>(n)))) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace ectf
