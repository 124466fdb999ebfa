#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sunforge/bitfam/family.hpp"

namespace sunforge {

/// Per-coordinate number of 1 entries among the selected vectors.
struct ColumnProfile {
  std::size_t tuple_size = 0;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;
};

/**
 * Column counts of the selected members.
 *
 * Counts are accumulated word-parallel in bit-sliced form: plane b holds bit
 * b of the running count for all 64 coordinates of a word, and each added
 * vector ripples through the planes as a carry chain.
 */
inline ColumnProfile column_profile(const Family& family, std::span<const std::size_t> indices) {
  detail::check_tuple(family.size(), indices);
  const std::size_t n = family.n();
  const std::size_t planes = std::bit_width(indices.size());

  ColumnProfile profile{indices.size(), std::vector<std::uint32_t>(n, 0)};
  if (indices.empty()) return profile;

  const std::size_t word_count = family[indices[0]].word_size();
  std::vector<BitVector::Word> plane(planes);
  for (std::size_t w = 0; w < word_count; ++w) {
    std::fill(plane.begin(), plane.end(), BitVector::Word{0});
    for (auto idx : indices) {
      BitVector::Word carry = family[idx].words()[w];
      for (std::size_t b = 0; b < planes && carry; ++b) {
        const BitVector::Word next = plane[b] & carry;
        plane[b] ^= carry;
        carry = next;
      }
    }
    const std::size_t base = w * BitVector::kWordBits;
    const std::size_t limit = std::min(n - base, BitVector::kWordBits);
    for (std::size_t b = 0; b < planes; ++b) {
      BitVector::Word bits = plane[b];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (bit < limit) profile.counts[base + bit] += std::uint32_t{1} << b;
      }
    }
  }
  return profile;
}

/// For each coordinate, how many selected q-ary members carry each symbol.
inline std::vector<std::vector<std::uint32_t>> column_symbol_counts(const QFamily& family,
                                                                    std::span<const std::size_t> indices) {
  detail::check_tuple(family.size(), indices);
  std::vector<std::vector<std::uint32_t>> counts(family.n(), std::vector<std::uint32_t>(family.q(), 0));
  for (auto idx : indices)
    for (std::size_t i = 0; i < family.n(); ++i) ++counts[i][family[idx][i]];
  return counts;
}

}  // namespace sunforge
