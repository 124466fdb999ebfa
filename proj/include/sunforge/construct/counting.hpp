#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/exact.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/errors.hpp"

namespace sunforge {

enum class CountMode { enumerate, closed_form };

namespace detail {

/// Column condition on an r-entry column given as r bits (bit 0 = first row).
inline bool column_allowed(std::uint32_t column, std::size_t r, Kind kind) {
  const auto ones = static_cast<std::size_t>(std::popcount(column));
  if (kind == Kind::ns) return ones <= 1 || ones + 1 >= r;
  // ff: the first entry is repeated at least r-2 times among the other r-1.
  const bool first = column & 1U;
  const std::size_t others_ones = ones - (first ? 1 : 0);
  const std::size_t same = first ? others_ones : (r - 1) - others_ones;
  return same + 2 >= r;
}

}  // namespace detail

/// Largest r*n handled by enumeration.
inline constexpr std::size_t kMatrixEnumerationLimit = 24;

/**
 * Number of r x n binary matrices whose every column satisfies the pattern
 * condition: column weight in {0, 1, r-1, r} (ns), or first entry repeated at
 * least r-2 times below it (ff). Enumeration walks all 2^(rn) matrices;
 * the closed form is (2r+2)^n or (2r)^n.
 */
inline BigInt count_matrices(std::size_t n, std::size_t r, Kind kind, CountMode mode) {
  detail::require_r(r);
  detail::require_binary_kind(kind);
  if (mode == CountMode::closed_form) return power(kind == Kind::ns ? 2 * r + 2 : 2 * r, n);
  if (r * n > kMatrixEnumerationLimit)
    throw CapExceeded("matrix enumeration needs r*n <= 24, got " + std::to_string(r * n));

  // Matrix bit (row * n + col).
  const std::uint64_t total = std::uint64_t{1} << (r * n);
  std::uint64_t count = 0;
  for (std::uint64_t mat = 0; mat < total; ++mat) {
    bool ok = true;
    for (std::size_t col = 0; col < n && ok; ++col) {
      std::uint32_t column = 0;
      for (std::size_t row = 0; row < r; ++row) column |= static_cast<std::uint32_t>((mat >> (row * n + col)) & 1U) << row;
      ok = detail::column_allowed(column, r, kind);
    }
    count += ok;
  }
  return count;
}

}  // namespace sunforge
