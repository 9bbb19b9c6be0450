#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mphf {

/// Fixed-size packed bit vector. Bit i lives in word i/64 at position i%64;
/// byte serialization is LSB-first within each byte.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Appends all bits of `other` after the current contents.
  void append(const BitVec& other) {
    for (std::size_t i = 0; i < other.size(); ++i) {
      push_back(other.get(i));
    }
  }

  void push_back(bool v) {
    if ((nbits_ & 63) == 0) words_.push_back(0);
    ++nbits_;
    set(nbits_ - 1, v);
  }

  /// ceil(size/8) bytes, bit i at byte i/8, position i%8.
  std::vector<std::uint8_t> to_bytes() const {
    std::vector<std::uint8_t> out((nbits_ + 7) / 8, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<std::uint8_t>(words_[i >> 3] >> ((i & 7) * 8));
    }
    return out;
  }

  static BitVec from_bytes(const std::uint8_t* data, std::size_t nbits) {
    BitVec v(nbits);
    const std::size_t nbytes = (nbits + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i) {
      v.words_[i >> 3] |= std::uint64_t{data[i]} << ((i & 7) * 8);
    }
    // mask tail bits beyond nbits
    if (nbits & 63) {
      v.words_.back() &= (std::uint64_t{1} << (nbits & 63)) - 1;
    }
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mphf
