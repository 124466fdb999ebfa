#pragma once

// Pattern predicates evaluated literally, one coordinate at a time, on small
// vectors packed into integers. These are deliberately independent of the
// word-parallel predicates in detect/ so the two can check each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sunforge/bitfam/family.hpp"

namespace sunforge::literal {

/// Entry of `v` at coordinate i (0-based; coordinate 0 is the most significant of n bits).
constexpr unsigned entry(std::uint32_t v, std::size_t n, std::size_t i) {
  return (v >> (n - 1 - i)) & 1U;
}

inline bool near_sunflower(std::span<const std::uint32_t> tuple, std::size_t n) {
  const std::size_t r = tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (auto v : tuple) ones += entry(v, n, i);
    if (!(ones == 0 || ones == 1 || ones == r - 1 || ones == r)) return false;
  }
  return true;
}

inline bool sunflower(std::span<const std::uint32_t> tuple, std::size_t n) {
  const std::size_t r = tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (auto v : tuple) ones += entry(v, n, i);
    if (!(ones == 0 || ones == 1 || ones == r)) return false;
  }
  return true;
}

/// tuple[focus_pos] is the focus. `side` < 0 checks every coordinate;
/// otherwise only coordinates where the focus equals `side`. At each checked
/// coordinate at least r-2 of the r-1 other entries must equal the focus entry.
inline bool focal_with_focus(std::span<const std::uint32_t> tuple, std::size_t focus_pos, std::size_t n, int side) {
  const std::size_t r = tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned f = entry(tuple[focus_pos], n, i);
    if (side >= 0 && f != static_cast<unsigned>(side)) continue;
    std::size_t agree = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (j != focus_pos && entry(tuple[j], n, i) == f) ++agree;
    if (agree + 2 < r) return false;
  }
  return true;
}

inline int side_of(Kind kind) {
  switch (kind) {
    case Kind::bff0: return 0;
    case Kind::bff1: return 1;
    default: return -1;
  }
}

/// The unordered tuple contains the pattern (for focal kinds: with some member as focus).
inline bool violates(std::span<const std::uint32_t> tuple, std::size_t n, Kind kind) {
  if (kind == Kind::ns) return near_sunflower(tuple, n);
  for (std::size_t f = 0; f < tuple.size(); ++f)
    if (focal_with_focus(tuple, f, n, side_of(kind))) return true;
  return false;
}

/// Number of distinct foci for which the tuple is (b-)focal.
inline std::size_t focal_foci(std::span<const std::uint32_t> tuple, std::size_t n, Kind kind) {
  std::size_t count = 0;
  for (std::size_t f = 0; f < tuple.size(); ++f)
    if (focal_with_focus(tuple, f, n, side_of(kind))) ++count;
  return count;
}

/// Calls `fn(combo)` for each k-subset of {0..m-1} in lexicographic order
/// until it returns true. Returns whether some call returned true.
template <class Fn>
bool for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Packs a family of length <= 32 into integers (coordinate 1 most significant).
inline std::vector<std::uint32_t> pack(const Family& family) {
  if (family.n() > 32) throw std::invalid_argument("literal::pack supports n <= 32");
  std::vector<std::uint32_t> out;
  out.reserve(family.size());
  for (const auto& v : family) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < family.n(); ++i) x = (x << 1) | (v.test(i) ? 1U : 0U);
    out.push_back(x);
  }
  return out;
}

/// Some r-subset of the members violates.
inline bool has_violation(const Family& family, std::size_t r, Kind kind) {
  const auto packed = pack(family);
  std::vector<std::uint32_t> tuple(r);
  return for_each_combination(packed.size(), r, [&](const std::vector<std::size_t>& c) {
    for (std::size_t i = 0; i < r; ++i) tuple[i] = packed[c[i]];
    return violates(tuple, family.n(), kind);
  });
}

}  // namespace sunforge::literal
