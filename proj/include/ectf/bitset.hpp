#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ectf {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Mask of the valid bits in the last word of a `bits`-bit set.
constexpr Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

namespace bits {

inline bool test(std::span<const Word> s, std::size_t i) {
  return (s[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline bool any(std::span<const Word> s) {
  for (Word w : s)
    if (w != 0) return true;
  return false;
}

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any_and(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

// Index of the lowest set bit at or after `from`, or `npos`-like `limit`.
inline std::size_t next_set(std::span<const Word> s, std::size_t from,
                            std::size_t limit) {
  if (from >= limit) return limit;
  std::size_t wi = from / kWordBits;
  Word w = s[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) {
      const std::size_t i = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      return i < limit ? i : limit;
    }
    if (++wi >= s.size()) return limit;
    w = s[wi];
  }
}

// Calls f(i) for every set bit i, in increasing order.
template <class F>
void for_each(std::span<const Word> s, F&& f) {
  for (std::size_t wi = 0; wi < s.size(); ++wi) {
    Word w = s[wi];
    while (w != 0) {
      f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

}  // namespace bits

// Fixed-size dynamic bitset; the owning counterpart of a span of words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false)
      : size_(size), words_(words_for(size), value ? ~Word{0} : Word{0}) {
    trim();
  }

  static Bitset from_words(std::span<const Word> words, std::size_t size) {
    Bitset b(size);
    for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = words[i];
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return bits::test(words_, i); }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  bool any() const { return bits::any(words_); }
  bool none() const { return !any(); }
  std::size_t count() const { return bits::count(words_); }

  Bitset& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) { return *this &= other.words(); }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    bits::for_each(words_, [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (!words_.empty()) words_.back() &= tail_mask(size_);
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace ectf
