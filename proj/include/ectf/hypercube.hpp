#pragma once

#include <cstdint>
#include <string>

#include "ectf/cayley.hpp"
#include "ectf/errors.hpp"

namespace ectf {

// Exact binomial coefficient; 0 when k < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Sum of C(dim, d) over the distance set: the degree of <Z_2^dim, dists>.
inline std::uint64_t ball_shell_sum(int dim, const std::set<int>& dists) {
  std::uint64_t total = 0;
  for (int d : dists) total += binomial(dim, d);
  return total;
}

// Given x, y, z with d(x,y) <= a+b, d(x,z) <= a+c, d(y,z) <= b+c, returns v
// with d(v,x) <= a, d(v,y) <= b, d(v,z) <= c.
//
// Construction: translate by the coordinate-wise majority m, after which the
// three points have disjoint supports. Zero works unless one weight exceeds
// its bound (at most one can, since the weights of two shifted points sum to
// their distance); then take the lowest w(x') - a coordinates of that
// point's support.
inline HyperPoint triangle_center(HyperPoint x, HyperPoint y, HyperPoint z, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("triangle_center: bounds must be nonnegative");
  if (hamming_distance(x, y) > a + b)
    throw DomainError("triangle_center: d(x,y) = " + std::to_string(hamming_distance(x, y)) +
                      " exceeds a+b = " + std::to_string(a + b));
  if (hamming_distance(x, z) > a + c)
    throw DomainError("triangle_center: d(x,z) = " + std::to_string(hamming_distance(x, z)) +
                      " exceeds a+c = " + std::to_string(a + c));
  if (hamming_distance(y, z) > b + c)
    throw DomainError("triangle_center: d(y,z) = " + std::to_string(hamming_distance(y, z)) +
                      " exceeds b+c = " + std::to_string(b + c));

  const HyperPoint majority = (x & y) | (x & z) | (y & z);
  const HyperPoint xs = x ^ majority, ys = y ^ majority, zs = z ^ majority;

  auto lowest_bits = [](HyperPoint support, int count) {
    HyperPoint out = 0;
    for (int i = 0; i < count; ++i) {
      const HyperPoint low = support & (~support + 1);
      out |= low;
      support ^= low;
    }
    return out;
  };

  HyperPoint shift = 0;
  if (hamming_weight(xs) > a)
    shift = lowest_bits(xs, hamming_weight(xs) - a);
  else if (hamming_weight(ys) > b)
    shift = lowest_bits(ys, hamming_weight(ys) - b);
  else if (hamming_weight(zs) > c)
    shift = lowest_bits(zs, hamming_weight(zs) - c);
  return shift ^ majority;
}

enum class DistanceParity { even, odd };

// Lower bound on the common neighbors of a pair in C_{3k+1} at distance 2t
// (even) or 2t-1 (odd), 1 <= t <= k:
//   even: C(3k+1-2t, k-t) * C(2t, t)
//   odd:  2 * C(3k+1-(2t-1), k-t) * C(2t-1, t)
inline std::uint64_t mu2_hypercube_formula(int k, int t, DistanceParity parity) {
  if (k < 1) throw ParameterError("mu2_hypercube_formula requires k >= 1");
  if (t < 1 || t > k)
    throw ParameterError("mu2_hypercube_formula requires 1 <= t <= k, got t=" + std::to_string(t));
  if (parity == DistanceParity::even)
    return binomial(3 * k + 1 - 2 * t, k - t) * binomial(2 * t, t);
  return 2 * binomial(3 * k + 1 - (2 * t - 1), k - t) * binomial(2 * t - 1, t);
}

}  // namespace ectf
