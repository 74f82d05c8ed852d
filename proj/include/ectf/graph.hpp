#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ectf/bitset.hpp"
#include "ectf/errors.hpp"

namespace ectf {

using Vertex = std::uint32_t;

// Family-specific coordinates of a vertex, e.g. (i, j, x) for twisted graphs.
using VertexLabel = std::vector<std::int64_t>;

// Largest order materialized as an explicit bit matrix (2^15 vertices, 128 MiB).
inline constexpr std::size_t kMaxExplicitOrder = std::size_t{1} << 15;

inline void check_capacity(std::size_t order, const std::string& what) {
  if (order > kMaxExplicitOrder)
    throw CapacityError(what + ": " + std::to_string(order) +
                        " vertices exceeds the explicit representation limit of " +
                        std::to_string(kMaxExplicitOrder));
}

class GraphBuilder;

// Simple undirected graph stored as a symmetric, irreflexive bit matrix.
// Immutable once built; all const members are safe to call concurrently.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return order_; }
  std::size_t row_words() const { return stride_; }

  std::span<const Word> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }

  std::size_t degree(Vertex v) const { return bits::count(row(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  // Bitset with every vertex set.
  Bitset all_vertices() const { return Bitset(order_, true); }

  void check_vertex(std::size_t v) const {
    if (v >= order_)
      throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(order_));
  }

  // Same vertex set and same adjacency; labels are ignored.
  friend bool same_adjacency(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> adj_;
  std::vector<VertexLabel> labels_;
};

// Mutable staging area for constructors. build() validates the invariants.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order) {
    check_capacity(order, "graph");
    g_.order_ = order;
    g_.stride_ = words_for(order);
    g_.adj_.assign(order * g_.stride_, 0);
  }

  std::size_t order() const { return g_.order_; }

  void add_edge(Vertex u, Vertex v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    set_bit(u, v);
    set_bit(v, u);
  }

  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  void set_labels(std::vector<VertexLabel> labels) {
    if (labels.size() != g_.order_)
      throw ParameterError("label count " + std::to_string(labels.size()) +
                           " does not match order " + std::to_string(g_.order_));
    g_.labels_ = std::move(labels);
  }

  Graph build() && {
    validate(g_);
    return std::move(g_);
  }

  // Checks symmetry, irreflexivity and label distinctness.
  static void validate(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u) {
      if (g.adjacent(u, u)) throw DomainError("self-loop at vertex " + std::to_string(u));
      bits::for_each(g.row(u), [&](std::size_t v) {
        if (!g.adjacent(static_cast<Vertex>(v), u))
          throw DomainError("asymmetric adjacency between " + std::to_string(u) + " and " +
                            std::to_string(v));
      });
    }
    if (g.has_labels()) {
      std::set<VertexLabel> seen(g.labels().begin(), g.labels().end());
      if (seen.size() != g.labels().size()) throw DomainError("duplicate vertex labels");
    }
  }

 private:
  void set_bit(Vertex u, Vertex v) {
    g_.adj_[static_cast<std::size_t>(u) * g_.stride_ + v / kWordBits] |= Word{1}
                                                                          << (v % kWordBits);
  }

  Graph g_;
};

// Graph from an explicit edge list; used mostly by tests and small fixtures.
inline Graph graph_from_edges(std::size_t order,
                              std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph graph_from_edges(std::size_t order,
                              std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return graph_from_edges(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                                           edges.size()));
}

// Intersection of N(v) over v in s; all vertices when s is empty.
inline Bitset common_neighbors(const Graph& g, std::span<const Vertex> s) {
  Bitset out = g.all_vertices();
  for (Vertex v : s) {
    g.check_vertex(v);
    out &= g.row(v);
  }
  return out;
}

inline Bitset common_neighbors(const Graph& g, std::initializer_list<Vertex> s) {
  return common_neighbors(g, std::span<const Vertex>(s.begin(), s.size()));
}

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  // degree -> number of vertices with that degree
  std::map<std::size_t, std::size_t> histogram;

  bool regular() const { return histogram.size() <= 1; }
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (Vertex v = 0; v < g.order(); ++v) ++s.histogram[g.degree(v)];
  if (!s.histogram.empty()) {
    s.min_degree = s.histogram.begin()->first;
    s.max_degree = s.histogram.rbegin()->first;
  }
  return s;
}

// Subgraph induced on `vertices` (in the given order), labels carried over.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  if (g.has_labels()) {
    std::vector<VertexLabel> labels;
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

// Applies a vertex permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw ParameterError("permutation size mismatch");
  std::vector<bool> seen(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || seen[p]) throw ParameterError("not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    bits::for_each(g.row(u), [&](std::size_t v) {
      if (u < v) b.add_edge(perm[u], perm[v]);
    });
  return std::move(b).build();
}

inline std::string label_to_string(const VertexLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(label[i]);
  }
  return out;
}

}  // namespace ectf
