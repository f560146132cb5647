#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdscope {

/// Fixed-width bitset over element indices, sized once at construction.
/// Subgroup membership sets and lattice relation rows are stored this way:
/// meet is AND, the subset test is AND + compare.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset operator&(const Bitset& other) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  Bitset operator|(const Bitset& other) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool operator==(const Bitset& other) const = default;

  /// First set bit, or -1 when empty.
  int first() const { return next(0); }

  /// First set bit at index >= from, or -1.
  int next(int from) const {
    if (from >= nbits_) return -1;
    std::size_t w = static_cast<std::size_t>(from) >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
      if (++w == words_.size()) return -1;
      cur = words_[w];
    }
  }

  std::vector<int> members() const {
    std::vector<int> r;
    r.reserve(count());
    for (int i = first(); i >= 0; i = next(i + 1)) r.push_back(i);
    return r;
  }

  /// Total order used for deterministic sorting: at the first index where
  /// membership differs, the set containing that index sorts first.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) return a.words_[i] & (diff & -diff);
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace cdscope
