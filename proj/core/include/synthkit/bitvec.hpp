#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "synthkit/errors.hpp"
#include "synthkit/hash.hpp"

namespace synthkit {

// Fixed-size bit vector backed by 64-bit words. Used for fingerprints,
// template/block compatibility masks and GA individuals.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool v = true) {
    uint64_t mask = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { words_[i >> 6] ^= 1ull << (i & 63); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  // Popcounts of intersection and union without allocating.
  static void and_or_counts(const BitVec& a, const BitVec& b, size_t* n_and,
                            size_t* n_or) {
    if (a.nbits_ != b.nbits_) throw DimensionError("bit vector size mismatch");
    size_t na = 0, no = 0;
    for (size_t i = 0; i < a.words_.size(); ++i) {
      na += std::popcount(a.words_[i] & b.words_[i]);
      no += std::popcount(a.words_[i] | b.words_[i]);
    }
    *n_and = na;
    *n_or = no;
  }

  BitVec& operator&=(const BitVec& o) {
    if (o.nbits_ != nbits_) throw DimensionError("bit vector size mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    if (o.nbits_ != nbits_) throw DimensionError("bit vector size mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  // Indices of set bits, ascending.
  std::vector<size_t> ones() const {
    std::vector<size_t> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        unsigned tz = std::countr_zero(w);
        out.push_back(wi * 64 + tz);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each_one(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        unsigned tz = std::countr_zero(w);
        f(wi * 64 + tz);
        w &= w - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  uint64_t hash() const {
    Hasher h;
    h.u64(nbits_);
    for (uint64_t w : words_) h.u64(w);
    return h.digest();
  }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace synthkit
