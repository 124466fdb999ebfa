#pragma once

// Vectors over the alphabet {0, ..., q-1}, one symbol per byte (q <= 256).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sunforge/bitfam/bit_vector.hpp"

namespace sunforge {

class QVector {
 public:
  static constexpr unsigned kMaxAlphabet = 256;

  QVector(std::size_t length, unsigned q) : q_(q), symbols_(length, 0) { validate_shape(length, q); }

  QVector(unsigned q, std::vector<std::uint8_t> symbols) : q_(q), symbols_(std::move(symbols)) {
    validate_shape(symbols_.size(), q);
    for (auto s : symbols_)
      if (s >= q) throw std::invalid_argument("QVector symbol " + std::to_string(s) + " >= q=" + std::to_string(q));
  }

  QVector(unsigned q, std::initializer_list<unsigned> symbols) : QVector(q, to_bytes(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  unsigned alphabet() const noexcept { return q_; }
  std::uint8_t operator[](std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }

  void set(std::size_t i, unsigned symbol) {
    if (symbol >= q_) throw std::invalid_argument("QVector symbol out of alphabet");
    symbols_.at(i) = static_cast<std::uint8_t>(symbol);
  }

  friend bool operator==(const QVector&, const QVector&) = default;

  /// Comma-separated decimal symbols.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(symbols_[i]);
    }
    return s;
  }

  std::size_t hash() const noexcept {
    std::string_view bytes(reinterpret_cast<const char*>(symbols_.data()), symbols_.size());
    return std::hash<std::string_view>{}(bytes) ^ (static_cast<std::size_t>(q_) << 1);
  }

 private:
  static void validate_shape(std::size_t length, unsigned q) {
    if (length == 0 || length > BitVector::kMaxLength) throw std::invalid_argument("QVector length must be in [1, 4096]");
    if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("QVector alphabet must be in [2, 256]");
  }

  static std::vector<std::uint8_t> to_bytes(std::initializer_list<unsigned> symbols) {
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size());
    for (auto s : symbols) {
      if (s > 255) throw std::invalid_argument("QVector symbol exceeds 255");
      out.push_back(static_cast<std::uint8_t>(s));
    }
    return out;
  }

  unsigned q_;
  std::vector<std::uint8_t> symbols_;
};

/// Coordinates where `a` and `b` hold different symbols.
inline BitVector difference_mask(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("difference_mask: length mismatch");
  BitVector mask(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) mask.set(i);
  return mask;
}

inline BitVector difference_mask(const BitVector& a, const BitVector& b) { return a ^ b; }

inline unsigned alphabet_of(const BitVector&) noexcept { return 2; }
inline unsigned alphabet_of(const QVector& v) noexcept { return v.alphabet(); }

}  // namespace sunforge

template <>
struct std::hash<sunforge::QVector> {
  std::size_t operator()(const sunforge::QVector& v) const noexcept { return v.hash(); }
};
