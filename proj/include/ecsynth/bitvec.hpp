#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ecsynth {

/// Fixed-length packed bit vector. Bit i lives in word i / 64 at position i % 64.
/// Bits past size() are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVec& operator^=(const BitVec& other) noexcept {
    for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }

  /// Parity of the bitwise AND, i.e. the GF(2) dot product.
  bool dot(const BitVec& other) const noexcept {
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
  }

  std::size_t popcount() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  /// Clears the padding bits of the last word after raw word writes.
  void trim() noexcept {
    if (size_ % kWordBits != 0) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  /// Little-endian "0101..." rendering, bit 0 first.
  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace ecsynth
