#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ectf/graph.hpp"

namespace ectf {

// Points of Z_2^n are integers; coordinate 1 is the least significant bit.
using HyperPoint = std::uint64_t;

inline int hamming_distance(HyperPoint x, HyperPoint y) { return std::popcount(x ^ y); }
inline int hamming_weight(HyperPoint x) { return std::popcount(x); }

// Cayley graph <Z_2^dim, dists>: x ~ y iff d(x, y) is in dists.
struct DistanceSetSpec {
  int dim = 1;
  std::set<int> dists;

  void validate() const {
    if (dim < 1) throw ParameterError("hypercube dimension must be >= 1");
    if (dists.empty()) throw ParameterError("distance set must be nonempty");
    for (int d : dists)
      if (d < 1 || d > dim)
        throw ParameterError("distance " + std::to_string(d) + " outside [1, " +
                             std::to_string(dim) + "]");
  }

  // Integer range [lo, hi] as a distance set (empty when lo > hi).
  static std::set<int> range(int lo, int hi) {
    std::set<int> out;
    for (int d = lo; d <= hi; ++d) out.insert(d);
    return out;
  }
};

// Membership table indexed by distance, for fast adjacency tests.
inline std::vector<bool> distance_table(const std::set<int>& dists, int dim) {
  std::vector<bool> t(static_cast<std::size_t>(dim) + 1, false);
  for (int d : dists)
    if (d >= 0 && d <= dim) t[static_cast<std::size_t>(d)] = true;
  return t;
}

inline Graph build_cayley(const DistanceSetSpec& spec) {
  spec.validate();
  if (spec.dim >= 63 || (std::size_t{1} << spec.dim) > kMaxExplicitOrder)
    throw CapacityError("Cayley graph of dimension " + std::to_string(spec.dim) +
                        " exceeds the explicit representation limit of " +
                        std::to_string(kMaxExplicitOrder) + " vertices");
  const std::size_t n = std::size_t{1} << spec.dim;
  const auto table = distance_table(spec.dists, spec.dim);

  // Generators: all points whose weight lies in dists.
  std::vector<HyperPoint> gens;
  for (HyperPoint g = 1; g < n; ++g)
    if (table[static_cast<std::size_t>(hamming_weight(g))]) gens.push_back(g);

  GraphBuilder b(n);
  for (HyperPoint x = 0; x < n; ++x)
    for (HyperPoint g : gens) {
      const HyperPoint y = x ^ g;
      if (x < y) b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  std::vector<VertexLabel> labels(n);
  for (HyperPoint x = 0; x < n; ++x) labels[x] = {static_cast<std::int64_t>(x)};
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

}  // namespace ectf
