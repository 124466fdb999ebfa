#pragma once

/**
 * Packed binary vectors of length n (1 <= n <= 4096).
 *
 * Coordinate i (0-based) lives in word i / 64, bit i % 64. Storage bits past
 * the last coordinate are always zero, so word-wise equality, hashing and
 * popcount never need to mask. Text form puts coordinate 1 leftmost.
 *
 * Vectors up to 128 coordinates are stored inline (no heap allocation).
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace sunforge {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxLength = 4096;

  /// All-zero vector of the given length.
  explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), Word{0}) {
    if (length == 0 || length > kMaxLength)
      throw std::invalid_argument("BitVector length must be in [1, 4096], got " + std::to_string(length));
  }

  /// Parses a 0/1 string; the leftmost character is coordinate 1.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        v.set(i);
      else if (bits[i] != '0')
        throw std::invalid_argument("BitVector: expected '0' or '1', got '" + std::string(1, bits[i]) + "'");
    }
    return v;
  }

  /// Vector whose 0-based coordinates in `ones` are set.
  static BitVector from_coordinates(std::size_t length, std::initializer_list<std::size_t> ones) {
    BitVector v(length);
    for (auto i : ones) v.set(i);
    return v;
  }

  /// Vector of length n read from the low n bits of `value`, with coordinate
  /// 1 as the most significant of those bits. Increasing `value` therefore
  /// walks {0,1}^n in lexicographic string order.
  static BitVector from_integer(std::size_t length, std::uint64_t value) {
    if (length > 64) throw std::invalid_argument("BitVector::from_integer supports n <= 64");
    BitVector v(length);
    for (std::size_t i = 0; i < length; ++i)
      if ((value >> (length - 1 - i)) & 1U) v.set(i);
    return v;
  }

  /// Builds from raw words; bits past `length` are cleared.
  static BitVector from_words(std::size_t length, std::span<const Word> words) {
    BitVector v(length);
    if (words.size() != v.words_.size()) throw std::invalid_argument("BitVector::from_words: word count mismatch");
    std::copy(words.begin(), words.end(), v.words_.begin());
    v.canonicalize();
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  std::size_t word_size() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool intersects(const BitVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  bool is_subset_of(const BitVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  BitVector& operator&=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  BitVector& operator|=(const BitVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// Coordinate-wise complement over positions 1..n.
  BitVector operator~() const {
    BitVector v(*this);
    for (auto& w : v.words_) w = ~w;
    v.canonicalize();
    return v;
  }

  /// Mask of the valid coordinates in word `w`.
  Word valid_mask(std::size_t w) const noexcept {
    if (w + 1 < words_.size() || length_ % kWordBits == 0) return ~Word{0};
    return (Word{1} << (length_ % kWordBits)) - 1;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.length_ == b.length_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Lexicographic order on the coordinate strings (coordinate 1 first).
  friend bool lexicographic_less(const BitVector& a, const BitVector& b) {
    a.check_same_length(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const Word diff = a.words_[w] ^ b.words_[w];
      if (diff) return (b.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL ^ length_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static std::size_t word_count(std::size_t length) noexcept { return (length + kWordBits - 1) / kWordBits; }

  void canonicalize() noexcept {
    if (!words_.empty()) words_.back() &= valid_mask(words_.size() - 1);
  }

  void check_index(std::size_t i) const {
    if (i >= length_) throw std::out_of_range("BitVector coordinate " + std::to_string(i) + " out of range");
  }

  void check_same_length(const BitVector& other) const {
    if (other.length_ != length_)
      throw std::invalid_argument("BitVector length mismatch: " + std::to_string(length_) + " vs " +
                                  std::to_string(other.length_));
  }

  std::size_t length_;
  boost::container::small_vector<Word, 2> words_;
};

/// Coordinate-wise exclusive-or; its popcount is the Hamming distance.
inline BitVector symmetric_difference(const BitVector& a, const BitVector& b) { return a ^ b; }

inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) d += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return d;
}

}  // namespace sunforge

template <>
struct std::hash<sunforge::BitVector> {
  std::size_t operator()(const sunforge::BitVector& v) const noexcept { return v.hash(); }
};
