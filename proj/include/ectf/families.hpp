#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ectf/cayley.hpp"
#include "ectf/graph.hpp"
#include "ectf/shattered.hpp"

namespace ectf {

// Constructors for the 3ECTF graph families. Vertices are enumerated in
// lexicographic order of their label tuples, so output is reproducible.

namespace families_detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

inline std::size_t checked_product(std::initializer_list<std::size_t> factors,
                                   const std::string& what) {
  std::size_t total = 1;
  for (std::size_t f : factors) {
    if (f != 0 && total > kMaxExplicitOrder / f) {
      check_capacity(kMaxExplicitOrder + 1, what);
    }
    total *= f;
  }
  check_capacity(total, what);
  return total;
}

inline std::size_t hypercube_points(int dim, const std::string& what) {
  if (dim >= 62) check_capacity(kMaxExplicitOrder + 1, what);
  return std::size_t{1} << dim;
}

}  // namespace families_detail

// A(n): n 4-cycles (i, x), x in Z_4, with antipodal cross edges.
inline Graph albert_cycles(int n) {
  families_detail::require(n >= 4, "albert_cycles requires n >= 4, got " + std::to_string(n));
  const std::size_t order = families_detail::checked_product({4, std::size_t(n)}, "albert_cycles");
  GraphBuilder b(order);
  auto id = [](int i, int x) { return static_cast<Vertex>((i - 1) * 4 + ((x % 4) + 4) % 4); };
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= n; ++i)
    for (int x = 0; x < 4; ++x) {
      labels.push_back({i, x});
      b.add_edge(id(i, x), id(i, x + 1));
      for (int i2 = i + 1; i2 <= n; ++i2) {
        b.add_edge(id(i, x), id(i2, x + 2));
      }
    }
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

// Albert graph A_M. Labels are (part, index) with part 0..3 for a, b, c, d
// and 1-based index. Shatteredness of M is not required here.
inline Graph albert_matrix(const BitMatrix& m) {
  families_detail::require(m.rows() >= 4 && m.cols() >= 4,
                           "albert_matrix requires at least 4 rows and 4 columns, got " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t order = 2 * rows + 2 * cols;
  check_capacity(order, "albert_matrix");
  auto a = [&](std::size_t i) { return static_cast<Vertex>(i); };
  auto b_ = [&](std::size_t i) { return static_cast<Vertex>(rows + i); };
  auto c = [&](std::size_t j) { return static_cast<Vertex>(2 * rows + j); };
  auto d = [&](std::size_t j) { return static_cast<Vertex>(2 * rows + cols + j); };

  GraphBuilder b(order);
  for (std::size_t i = 0; i < rows; ++i) b.add_edge(a(i), b_(i));
  for (std::size_t j = 0; j < cols; ++j) b.add_edge(c(j), d(j));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (m.at(i, j)) {
        b.add_edge(a(i), c(j));
        b.add_edge(b_(i), d(j));
      } else {
        b.add_edge(a(i), d(j));
        b.add_edge(b_(i), c(j));
      }
    }
  std::vector<VertexLabel> labels;
  for (std::int64_t part = 0; part < 4; ++part) {
    const std::size_t count = part < 2 ? rows : cols;
    for (std::size_t idx = 1; idx <= count; ++idx)
      labels.push_back({part, static_cast<std::int64_t>(idx)});
  }
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

// C_{3k+1} = <Z_2^{3k+1}, {2k+1, ..., 3k+1}>.
inline Graph erdos_hypercube(int k) {
  families_detail::require(k >= 1, "erdos_hypercube requires k >= 1, got " + std::to_string(k));
  return build_cayley({3 * k + 1, DistanceSetSpec::range(2 * k + 1, 3 * k + 1)});
}

// Distance sets shared by C_{3k-1}(m) and G_T(m, k).
inline std::set<int> layer_inner_distances(int k) {
  auto d = DistanceSetSpec::range(2 * k + 1, 3 * k - 1);
  d.insert(2 * k - 1);
  return d;
}
inline std::set<int> layer_cross_distances(int k) { return DistanceSetSpec::range(2 * k, 3 * k - 1); }

// C_{3k-1}(m): m copies of Z_2^{3k-1}. Labels are (i, v), i in 1..m.
inline Graph hypercube_layers(int k, int m) {
  families_detail::require(k >= 1, "hypercube_layers requires k >= 1, got " + std::to_string(k));
  families_detail::require(m >= 4, "hypercube_layers requires m >= 4, got " + std::to_string(m));
  const int dim = 3 * k - 1;
  const std::size_t points = families_detail::hypercube_points(dim, "hypercube_layers");
  const std::size_t order = families_detail::checked_product({points, std::size_t(m)}, "hypercube_layers");
  const auto inner = distance_table(layer_inner_distances(k), dim);
  const auto cross = distance_table(layer_cross_distances(k), dim);

  GraphBuilder b(order);
  auto id = [&](int i, HyperPoint v) { return static_cast<Vertex>((i - 1) * points + v); };
  for (HyperPoint v = 0; v < points; ++v)
    for (HyperPoint u = 0; u < points; ++u) {
      const auto d = static_cast<std::size_t>(hamming_distance(u, v));
      for (int i = 1; i <= m; ++i) {
        if (inner[d] && v < u) b.add_edge(id(i, v), id(i, u));
        if (cross[d])
          for (int j = i + 1; j <= m; ++j) b.add_edge(id(i, v), id(j, u));
      }
    }
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= m; ++i)
    for (HyperPoint v = 0; v < points; ++v) labels.push_back({i, static_cast<std::int64_t>(v)});
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

// Distance set of C_{k,j}: odd distances 2k+1, ..., 2k+2j-1 and the
// interval 2(k+j), ..., 3k+j.
inline DistanceSetSpec ckj_spec(int k, int j) {
  families_detail::require(k >= 1 && j >= 1 && j <= k,
                           "hypercube_ckj requires 1 <= j <= k, got k=" + std::to_string(k) +
                               " j=" + std::to_string(j));
  DistanceSetSpec spec{3 * k + j, DistanceSetSpec::range(2 * (k + j), 3 * k + j)};
  for (int t = 1; t <= j; ++t) spec.dists.insert(2 * k + 2 * t - 1);
  return spec;
}

inline Graph hypercube_ckj(int k, int j) { return build_cayley(ckj_spec(k, j)); }

// O_{3n-1}: arcs {t, ..., t+n-1} of Z_{3n-1}, adjacent when disjoint.
inline Graph circular(int n) {
  families_detail::require(n >= 1, "circular requires n >= 1, got " + std::to_string(n));
  const std::size_t len = static_cast<std::size_t>(n);
  const std::size_t points = 3 * len - 1;
  check_capacity(points, "circular");
  GraphBuilder b(points);
  for (std::size_t t = 0; t < points; ++t)
    for (std::size_t s = t + 1; s < points; ++s) {
      const std::size_t forward = s - t, backward = points - forward;
      if (forward >= len && backward >= len)
        b.add_edge(static_cast<Vertex>(t), static_cast<Vertex>(s));
    }
  std::vector<VertexLabel> labels;
  for (std::size_t t = 0; t < points; ++t) labels.push_back({static_cast<std::int64_t>(t)});
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

// Twist on Z_2^dim: (x1, x2, x3, ...) -> (x2, x1 + 1, x3, ...), with x1 and
// x2 the two least significant bits.
inline HyperPoint twist(HyperPoint x, int dim) {
  families_detail::require(dim >= 2, "twist requires dimension >= 2");
  const HyperPoint x1 = x & 1U, x2 = (x >> 1) & 1U;
  return (x & ~HyperPoint{3}) | x2 | ((x1 ^ 1U) << 1);
}

// (y1, y2, ...) -> (y2 + 1, y1, ...)
inline HyperPoint twist_inv(HyperPoint y, int dim) {
  families_detail::require(dim >= 2, "twist requires dimension >= 2");
  const HyperPoint y1 = y & 1U, y2 = (y >> 1) & 1U;
  return (y & ~HyperPoint{3}) | (y2 ^ 1U) | (y1 << 1);
}

namespace families_detail {

// Z_4 blow-up shared by G(m0..m3) and G_T(m): parts[i] copies of a 4-cycle
// in part i; arcs(i, i2) decides the x -> x+3 cross edges.
template <class Arc>
Graph twisted_z4(const std::vector<std::size_t>& parts, Arc&& arc, const std::string& what) {
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + 4 * parts[i];
  check_capacity(offset.back(), what);
  GraphBuilder b(offset.back());
  auto id = [&](std::size_t i, std::size_t j, int x) {
    return static_cast<Vertex>(offset[i] + (j - 1) * 4 + static_cast<std::size_t>(((x % 4) + 4) % 4));
  };
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 1; j <= parts[i]; ++j)
      for (int x = 0; x < 4; ++x) {
        labels.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), x});
        b.add_edge(id(i, j, x), id(i, j, x + 1));
        for (std::size_t j2 = j + 1; j2 <= parts[i]; ++j2) b.add_edge(id(i, j, x), id(i, j2, x + 2));
        for (std::size_t i2 = 0; i2 < parts.size(); ++i2) {
          if (i2 == i || !arc(i, i2)) continue;
          for (std::size_t j2 = 1; j2 <= parts[i2]; ++j2) b.add_edge(id(i, j, x), id(i2, j2, x + 3));
        }
      }
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

}  // namespace families_detail

// G(m0, m1, m2, m3), cross edges along the arcs of T4.
inline Graph twisted_four(int m0, int m1, int m2, int m3) {
  const std::array<int, 4> ms{m0, m1, m2, m3};
  for (int mi : ms)
    families_detail::require(mi >= 2, "twisted_four requires every m_i >= 2, got " + std::to_string(mi));
  const Tournament t4 = canonical_tournaments().first;
  std::vector<std::size_t> parts(ms.begin(), ms.end());
  return families_detail::twisted_z4(
      parts, [&](std::size_t i, std::size_t i2) { return t4.beats(i, i2); }, "twisted_four");
}

// G_T(m).
inline Graph twisted_tournament(const Tournament& t, int m) {
  families_detail::require(m >= 2, "twisted_tournament requires m >= 2, got " + std::to_string(m));
  families_detail::require(t.order() >= 4, "twisted_tournament requires at least 4 tournament vertices");
  std::vector<std::size_t> parts(t.order(), static_cast<std::size_t>(m));
  return families_detail::twisted_z4(
      parts, [&](std::size_t i, std::size_t i2) { return t.beats(i, i2); }, "twisted_tournament");
}

// G_T(m, k): vertices (i, j, x) with x in Z_2^{3k-1}.
inline Graph twisted_tournament_hypercube(const Tournament& t, int m, int k) {
  families_detail::require(m >= 2, "twisted_tournament_hypercube requires m >= 2, got " + std::to_string(m));
  families_detail::require(k >= 1, "twisted_tournament_hypercube requires k >= 1, got " + std::to_string(k));
  families_detail::require(t.order() >= 4, "twisted_tournament_hypercube requires at least 4 tournament vertices");
  const int dim = 3 * k - 1;
  const std::size_t points = families_detail::hypercube_points(dim, "twisted_tournament_hypercube");
  const std::size_t parts = t.order();
  const std::size_t copies = static_cast<std::size_t>(m);
  const std::size_t order =
      families_detail::checked_product({parts, copies, points}, "twisted_tournament_hypercube");
  const auto inner = distance_table(layer_inner_distances(k), dim);
  const auto cross = distance_table(layer_cross_distances(k), dim);

  GraphBuilder b(order);
  auto id = [&](std::size_t i, std::size_t j, HyperPoint x) {
    return static_cast<Vertex>((i * copies + (j - 1)) * points + x);
  };
  for (HyperPoint x = 0; x < points; ++x)
    for (HyperPoint y = 0; y < points; ++y) {
      const auto d = static_cast<std::size_t>(hamming_distance(x, y));
      const auto dt = static_cast<std::size_t>(hamming_distance(x, twist(y, dim)));
      for (std::size_t i = 0; i < parts; ++i)
        for (std::size_t j = 1; j <= copies; ++j) {
          if (inner[d] && x < y) b.add_edge(id(i, j, x), id(i, j, y));
          if (cross[d])
            for (std::size_t j2 = j + 1; j2 <= copies; ++j2) b.add_edge(id(i, j, x), id(i, j2, y));
          if (cross[dt])
            for (std::size_t i2 = 0; i2 < parts; ++i2) {
              if (i2 == i || !t.beats(i, i2)) continue;
              for (std::size_t j2 = 1; j2 <= copies; ++j2) b.add_edge(id(i, j, x), id(i2, j2, y));
            }
        }
    }
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = 1; j <= copies; ++j)
      for (HyperPoint x = 0; x < points; ++x)
        labels.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                          static_cast<std::int64_t>(x)});
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

}  // namespace ectf
