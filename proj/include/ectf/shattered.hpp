#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ectf/errors.hpp"
#include "ectf/parallel.hpp"
#include "ectf/rng.hpp"

namespace ectf {

// m x n zero-one matrix, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ParameterError("matrix dimensions must be >= 1");
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix filled(std::size_t rows, std::size_t cols, bool value) {
    BitMatrix m(rows, cols);
    for (auto& e : m.data_) e = value ? 1 : 0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    check(i, j);
    data_[i * cols_ + j] = v ? 1 : 0;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
  }

  BitMatrix complemented() const {
    BitMatrix c = *this;
    for (auto& e : c.data_) e ^= 1;
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw DomainError("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// Orientation of the complete graph on {0, ..., order-1}.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(std::size_t order) : n_(order), beats_(order * order, 0) {
    if (order == 0) throw ParameterError("tournament order must be >= 1");
  }

  // Every unordered pair must appear exactly once among the arcs.
  static Tournament from_arcs(std::size_t order,
                              const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    Tournament t(order);
    for (auto [i, j] : arcs) {
      if (i >= order || j >= order) throw DomainError("tournament arc out of range");
      if (i == j) throw DomainError("tournament self-loop at " + std::to_string(i));
      if (t.beats(i, j) || t.beats(j, i))
        throw DomainError("pair {" + std::to_string(i) + ", " + std::to_string(j) +
                          "} oriented twice");
      t.beats_[i * order + j] = 1;
    }
    if (arcs.size() != order * (order - 1) / 2)
      throw DomainError("tournament is missing arcs");
    return t;
  }

  std::size_t order() const { return n_; }

  // i -> j
  bool beats(std::size_t i, std::size_t j) const { return beats_[i * n_ + j] != 0; }

  Tournament reversed() const {
    Tournament r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.beats_[i * n_ + j] = beats_[j * n_ + i];
    return r;
  }

  std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (beats(i, j)) out.emplace_back(i, j);
    return out;
  }

  // Completeness and antisymmetry.
  bool valid() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (beats(i, i)) return false;
      for (std::size_t j = i + 1; j < n_; ++j)
        if (beats(i, j) == beats(j, i)) return false;
    }
    return true;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> beats_;
};

// T4: source 0 beating the directed 3-cycle 1 -> 2 -> 3 -> 1. T4' is its reversal.
inline std::pair<Tournament, Tournament> canonical_tournaments() {
  Tournament t4 = Tournament::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  Tournament t4p = t4.reversed();
  return {t4, t4p};
}

inline Tournament transitive_tournament(std::size_t order) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j) arcs.emplace_back(i, j);
  return Tournament::from_arcs(order, arcs);
}

// --- shattered matrices -----------------------------------------------------

// The four complement classes of 3-bit patterns, keyed by the member whose
// first bit is 0: {000,111}, {001,110}, {010,101}, {011,100}.
inline constexpr std::array<const char*, 4> kPatternPairs = {"000/111", "001/110", "010/101",
                                                             "011/100"};

inline int pattern_class(bool a, bool b, bool c) {
  const int p = (a ? 4 : 0) | (b ? 2 : 0) | (c ? 1 : 0);
  return (p & 4) ? (~p & 7) : p;
}

struct MatrixShatterWitness {
  bool rows = true;                  // triple of rows (else columns)
  std::array<std::size_t, 3> triple{};  // 0-based indices, increasing
  int missing_class = 0;             // index into kPatternPairs

  std::string describe() const {
    return std::string(rows ? "rows" : "columns") + " {" + std::to_string(triple[0]) + ", " +
           std::to_string(triple[1]) + ", " + std::to_string(triple[2]) + "} miss pattern pair " +
           kPatternPairs[static_cast<std::size_t>(missing_class)];
  }
};

struct MatrixShatterVerdict {
  bool shattered = false;
  std::optional<MatrixShatterWitness> witness;
  explicit operator bool() const { return shattered; }
};

namespace shatter_detail {

// First row triple (of m, viewing entries through `entry(row, col)`) that
// misses a pattern class among the `width` columns.
template <class Entry>
std::optional<MatrixShatterWitness> first_bad_triple(std::size_t m, std::size_t width,
                                                     Entry&& entry, bool rows) {
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        unsigned seen = 0;
        for (std::size_t j = 0; j < width && seen != 0xF; ++j)
          seen |= 1U << pattern_class(entry(a, j), entry(b, j), entry(c, j));
        if (seen != 0xF) {
          int missing = 0;
          while (seen & (1U << missing)) ++missing;
          return MatrixShatterWitness{rows, {a, b, c}, missing};
        }
      }
  return std::nullopt;
}

}  // namespace shatter_detail

// Every 3 rows and every 3 columns show all four complement classes.
// Witness: first violating row triple, else first violating column triple.
inline MatrixShatterVerdict is_shattered_matrix(const BitMatrix& m) {
  if (m.rows() < 3 || m.cols() < 3)
    throw ParameterError("shattered check needs at least 3 rows and 3 columns");
  auto by_row = [&](std::size_t r, std::size_t c) { return m.at(r, c); };
  auto by_col = [&](std::size_t c, std::size_t r) { return m.at(r, c); };
  if (auto w = shatter_detail::first_bad_triple(m.rows(), m.cols(), by_row, true))
    return {false, w};
  if (auto w = shatter_detail::first_bad_triple(m.cols(), m.rows(), by_col, false))
    return {false, w};
  return {true, std::nullopt};
}

// --- shattered tournaments --------------------------------------------------

// True iff the four vertices induce T4 or T4': every pair of them is joined
// by exactly one directed path of length two through the other two.
inline bool induces_t4_or_t4p(const Tournament& t, const std::array<std::size_t, 4>& s) {
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = p + 1; q < 4; ++q) {
      int paths = 0;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == p || r == q) continue;
        const std::size_t u = s[p], v = s[q], w = s[r];
        if ((t.beats(u, w) && t.beats(w, v)) || (t.beats(v, w) && t.beats(w, u))) ++paths;
      }
      if (paths != 1) return false;
    }
  return true;
}

struct TournamentShatterVerdict {
  bool shattered = false;
  std::optional<std::array<std::size_t, 3>> witness;  // triple with no extension
  explicit operator bool() const { return shattered; }
};

inline TournamentShatterVerdict is_shattered_tournament(const Tournament& t) {
  const std::size_t n = t.order();
  if (n < 4) throw ParameterError("shattered tournament check needs at least 4 vertices");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        bool extends = false;
        for (std::size_t w = 0; w < n && !extends; ++w)
          if (w != a && w != b && w != c) extends = induces_t4_or_t4p(t, {a, b, c, w});
        if (!extends) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
  return {true, std::nullopt};
}

// --- seeded generation ------------------------------------------------------

// Entries drawn row-major, one engine bit each.
inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  BitMatrix m(rows, cols);
  Rng rng(seed);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.bit());
  return m;
}

// Pairs i < j in lexicographic order; a 1 bit orients i -> j.
inline Tournament random_tournament(std::size_t order, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  Rng rng(seed);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j) {
      if (rng.bit())
        arcs.emplace_back(i, j);
      else
        arcs.emplace_back(j, i);
    }
  return Tournament::from_arcs(order, arcs);
}

// Trial t of a run with seed s uses derive_seed(s, t).
inline double shattered_fraction(std::size_t rows, std::size_t cols, std::size_t trials,
                                 std::uint64_t seed, const ExecOptions& opt = {}) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  auto hits = map_indexed(trials, opt, [&](std::size_t t) -> int {
    return is_shattered_matrix(random_matrix(rows, cols, derive_seed(seed, t))).shattered;
  });
  std::size_t count = 0;
  for (int h : hits) count += static_cast<std::size_t>(h);
  return static_cast<double>(count) / static_cast<double>(trials);
}

inline double shattered_tournament_fraction(std::size_t order, std::size_t trials,
                                            std::uint64_t seed, const ExecOptions& opt = {}) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  auto hits = map_indexed(trials, opt, [&](std::size_t t) -> int {
    return is_shattered_tournament(random_tournament(order, derive_seed(seed, t))).shattered;
  });
  std::size_t count = 0;
  for (int h : hits) count += static_cast<std::size_t>(h);
  return static_cast<double>(count) / static_cast<double>(trials);
}

template <class T>
struct SeededInstance {
  T value;
  std::uint64_t trial = 0;  // generated from derive_seed(seed, trial)
};

// First shattered trial of the seeded stream, searching at most max_trials.
inline std::optional<SeededInstance<BitMatrix>> find_shattered_matrix(
    std::size_t rows, std::size_t cols, std::uint64_t seed, std::size_t max_trials,
    const ExecOptions& opt = {}) {
  return find_first(max_trials, opt,
                    [&](std::size_t t) -> std::optional<SeededInstance<BitMatrix>> {
                      BitMatrix m = random_matrix(rows, cols, derive_seed(seed, t));
                      if (is_shattered_matrix(m)) return SeededInstance<BitMatrix>{m, t};
                      return std::nullopt;
                    });
}

inline std::optional<SeededInstance<Tournament>> find_shattered_tournament(
    std::size_t order, std::uint64_t seed, std::size_t max_trials, const ExecOptions& opt = {}) {
  return find_first(max_trials, opt,
                    [&](std::size_t t) -> std::optional<SeededInstance<Tournament>> {
                      Tournament tt = random_tournament(order, derive_seed(seed, t));
                      if (is_shattered_tournament(tt)) return SeededInstance<Tournament>{tt, t};
                      return std::nullopt;
                    });
}

// --- file formats -----------------------------------------------------------

// "m n" then m lines of n '0'/'1' characters.
inline std::string format_matrix(const BitMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (m.at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

inline BitMatrix parse_matrix(const std::string& text) {
  static constexpr const char* kSpace = " \t\r\n";
  std::size_t pos = 0;
  auto next_token = [&]() -> std::pair<std::size_t, std::string> {
    const std::size_t begin = text.find_first_not_of(kSpace, pos);
    if (begin == std::string::npos) return {text.size(), {}};
    std::size_t end = text.find_first_of(kSpace, begin);
    if (end == std::string::npos) end = text.size();
    pos = end;
    return {begin, text.substr(begin, end - begin)};
  };
  auto number = [&](const char* what) {
    auto [at, tok] = next_token();
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw ParseError(std::string("matrix: expected ") + what, at);
    const std::size_t v = std::stoul(tok);
    if (v == 0) throw ParseError(std::string("matrix: ") + what + " must be >= 1", at);
    return v;
  };
  const std::size_t rows = number("row count");
  const std::size_t cols = number("column count");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto [at, line] = next_token();
    if (line.empty()) throw ParseError("matrix: missing row " + std::to_string(i + 1), at);
    if (line.size() != cols)
      throw ParseError("matrix: row " + std::to_string(i + 1) + " has " +
                           std::to_string(line.size()) + " entries, expected " +
                           std::to_string(cols),
                       at);
    for (std::size_t j = 0; j < cols; ++j) {
      if (line[j] != '0' && line[j] != '1')
        throw ParseError("matrix: entry must be '0' or '1'", at + j);
      m.set(i, j, line[j] == '1');
    }
  }
  if (auto [at, extra] = next_token(); !extra.empty())
    throw ParseError("matrix: trailing content", at);
  return m;
}

// "v" then one line "i j" per arc i -> j.
inline std::string format_tournament(const Tournament& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (auto [i, j] : t.arcs()) out << i << ' ' << j << '\n';
  return out.str();
}

inline Tournament parse_tournament(const std::string& text) {
  std::istringstream in(text);
  std::size_t order = 0;
  if (!(in >> order) || order == 0)
    throw ParseError("tournament: expected vertex count >= 1", 0);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  while (true) {
    in >> std::ws;
    if (in.eof()) break;
    const auto at = static_cast<std::size_t>(in.tellg());
    std::size_t i = 0, j = 0;
    if (!(in >> i >> j)) throw ParseError("tournament: arcs must be pairs of vertex ids", at);
    arcs.emplace_back(i, j);
  }
  try {
    return Tournament::from_arcs(order, arcs);
  } catch (const DomainError& e) {
    throw ParseError(std::string("tournament: ") + e.what(), text.size());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ectf
