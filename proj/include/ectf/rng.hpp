#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ectf {

// Identifier written into reports so instances can be regenerated elsewhere.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64(splitmix64(seed))";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of the `stream`-th independent substream of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

// Bit and integer source. Only raw engine output is used (never the
// implementation-defined std distributions), so streams are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  bool bit() {
    if (left_ == 0) {
      buffer_ = engine_();
      left_ = 64;
    }
    const bool b = buffer_ & 1U;
    buffer_ >>= 1;
    --left_;
    return b;
  }

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int left_ = 0;
};

}  // namespace ectf
