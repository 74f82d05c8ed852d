#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ectf/graph.hpp"

namespace ectf {

namespace iso_detail {

using Coloring = std::vector<std::size_t>;

// Colors of both graphs are refined together so that equal color ids mean
// the same refinement signature on either side.
struct ColoringPair {
  Coloring g;
  Coloring h;
  std::size_t colors = 0;
};

inline std::vector<std::pair<std::size_t, std::size_t>> neighbor_signature(
    const Graph& graph, const Coloring& colors, Vertex v) {
  std::map<std::size_t, std::size_t> counts;
  bits::for_each(graph.row(v), [&](std::size_t u) { ++counts[colors[u]]; });
  return {counts.begin(), counts.end()};
}

// Iterates color refinement to a fixpoint. Returns false if the two sides
// stop being compatible (a color class has different sizes).
inline bool refine(const Graph& g, const Graph& h, ColoringPair& c) {
  using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
  while (true) {
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sg(g.order()), sh(h.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      sg[v] = {c.g[v], neighbor_signature(g, c.g, v)};
      ids.emplace(sg[v], 0);
    }
    for (Vertex v = 0; v < h.order(); ++v) {
      sh[v] = {c.h[v], neighbor_signature(h, c.h, v)};
      ids.emplace(sh[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<std::size_t> size_g(next, 0), size_h(next, 0);
    for (Vertex v = 0; v < g.order(); ++v) c.g[v] = ids[sg[v]], ++size_g[c.g[v]];
    for (Vertex v = 0; v < h.order(); ++v) c.h[v] = ids[sh[v]], ++size_h[c.h[v]];
    if (size_g != size_h) return false;
    if (next == c.colors) return true;
    c.colors = next;
  }
}

inline bool mapping_is_isomorphism(const Graph& g, const Graph& h,
                                   const std::vector<Vertex>& pi) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(pi[u], pi[v])) return false;
  return true;
}

inline std::optional<std::vector<Vertex>> search(const Graph& g, const Graph& h,
                                                 ColoringPair c) {
  if (!refine(g, h, c)) return std::nullopt;

  std::vector<std::size_t> class_size(c.colors, 0);
  for (std::size_t col : c.g) ++class_size[col];

  // Target cell: smallest non-singleton class, lowest color id on ties.
  std::size_t target = c.colors;
  for (std::size_t col = 0; col < c.colors; ++col)
    if (class_size[col] > 1 && (target == c.colors || class_size[col] < class_size[target]))
      target = col;

  if (target == c.colors) {
    std::vector<Vertex> by_color(c.colors);
    for (Vertex v = 0; v < h.order(); ++v) by_color[c.h[v]] = v;
    std::vector<Vertex> pi(g.order());
    for (Vertex v = 0; v < g.order(); ++v) pi[v] = by_color[c.g[v]];
    if (mapping_is_isomorphism(g, h, pi)) return pi;
    return std::nullopt;
  }

  Vertex pivot = 0;
  while (c.g[pivot] != target) ++pivot;
  for (Vertex w = 0; w < h.order(); ++w) {
    if (c.h[w] != target) continue;
    ColoringPair next = c;
    next.g[pivot] = next.colors;
    next.h[w] = next.colors;
    ++next.colors;
    if (auto pi = search(g, h, std::move(next))) return pi;
  }
  return std::nullopt;
}

}  // namespace iso_detail

// Returns pi with adj_g(u, v) <=> adj_h(pi[u], pi[v]), or nothing.
// Individualization/refinement with backtracking; meant for small graphs.
inline std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto dg = degree_stats(g), dh = degree_stats(h);
  if (dg.histogram != dh.histogram) return std::nullopt;
  if (g.order() == 0) return std::vector<Vertex>{};

  iso_detail::ColoringPair c;
  c.g.assign(g.order(), 0);
  c.h.assign(h.order(), 0);
  c.colors = 1;
  return iso_detail::search(g, h, std::move(c));
}

}  // namespace ectf
