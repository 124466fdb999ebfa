#pragma once

/**
 * Membership tests for sunflowers, near-sunflowers and (b-)focal families.
 *
 * Column conditions are evaluated 64 coordinates at a time with saturating
 * counters: for each word we track which columns have seen at least one and
 * at least two 1 entries, and likewise for 0 entries. A column count lies in
 * [2, r-2] exactly when it has at least two of each, which is the only way a
 * near-sunflower can fail. Focal conditions reduce to pairwise disjointness of
 * the difference masks petal XOR focus.
 */

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/detect/witness.hpp"

namespace sunforge {

namespace detail {

struct SaturatingColumns {
  BitVector::Word ones1 = 0;
  BitVector::Word ones2 = 0;
  BitVector::Word zeros1 = 0;
  BitVector::Word zeros2 = 0;

  void add(BitVector::Word x, BitVector::Word valid) noexcept {
    ones2 |= ones1 & x;
    ones1 |= x;
    const BitVector::Word z = ~x & valid;
    zeros2 |= zeros1 & z;
    zeros1 |= z;
  }

  /// Some column count is in [2, (picked)-2].
  bool split() const noexcept { return (ones2 & zeros2) != 0; }
};

inline void require_tuple_size(std::size_t r) {
  if (r < 3) throw std::invalid_argument("tuples must have size r >= 3, got " + std::to_string(r));
}

/// Coordinates where the focus equals the constrained side bit (all coordinates for `both`).
inline BitVector side_mask(const BitVector& focus, FocalSide side) {
  switch (side) {
    case FocalSide::both: return ~BitVector(focus.size());
    case FocalSide::one: return focus;
    case FocalSide::zero: return ~focus;
  }
  return focus;
}

/// Shared by binary and q-ary focal checks: masks must be pairwise disjoint.
inline bool pairwise_disjoint(std::span<const BitVector> masks) {
  if (masks.empty()) return true;
  BitVector seen(masks.front().size());
  for (const auto& m : masks) {
    if (seen.intersects(m)) return false;
    seen |= m;
  }
  return true;
}

}  // namespace detail

/// Every column count lies in {0, 1, r}.
inline bool is_sunflower(const Family& family, std::span<const std::size_t> indices) {
  detail::require_tuple_size(indices.size());
  detail::check_tuple(family.size(), indices);
  const std::size_t words = family[indices[0]].word_size();
  for (std::size_t w = 0; w < words; ++w) {
    detail::SaturatingColumns cols;
    const auto valid = family[indices[0]].valid_mask(w);
    for (auto i : indices) cols.add(family[i].words()[w], valid);
    // Counts of 2..r-1 ones are exactly "at least two ones and at least one zero".
    if (cols.ones2 & cols.zeros1) return false;
  }
  return true;
}

/// Every column count lies in {0, 1, r-1, r}.
inline bool is_near_sunflower(const Family& family, std::span<const std::size_t> indices) {
  detail::require_tuple_size(indices.size());
  detail::check_tuple(family.size(), indices);
  const std::size_t words = family[indices[0]].word_size();
  for (std::size_t w = 0; w < words; ++w) {
    detail::SaturatingColumns cols;
    const auto valid = family[indices[0]].valid_mask(w);
    for (auto i : indices) cols.add(family[i].words()[w], valid);
    if (cols.split()) return false;
  }
  return true;
}

/// On the coordinates selected by `side`, at most one petal differs from the focus.
inline bool is_b_focal(const Family& family, std::size_t focus, std::span<const std::size_t> petals, FocalSide side) {
  detail::require_tuple_size(petals.size() + 1);
  std::vector<std::size_t> all{focus};
  all.insert(all.end(), petals.begin(), petals.end());
  detail::check_tuple(family.size(), all);

  const BitVector& x0 = family[focus];
  const BitVector restrict_to = detail::side_mask(x0, side);
  BitVector seen(family.n());
  for (auto p : petals) {
    BitVector d = (family[p] ^ x0) & restrict_to;
    if (seen.intersects(d)) return false;
    seen |= d;
  }
  return true;
}

inline bool is_b_focal(const Family& family, std::size_t focus, std::span<const std::size_t> petals, unsigned b) {
  if (b > 1) throw std::invalid_argument("b must be 0 or 1");
  return is_b_focal(family, focus, petals, side_for_bit(b));
}

/// At every coordinate at most one petal differs from the focus.
inline bool is_focal(const Family& family, std::size_t focus, std::span<const std::size_t> petals) {
  return is_b_focal(family, focus, petals, FocalSide::both);
}

/// q-ary version: "differs from the focus" masks must be pairwise disjoint.
inline bool is_focal(const QFamily& family, std::size_t focus, std::span<const std::size_t> petals) {
  detail::require_tuple_size(petals.size() + 1);
  std::vector<std::size_t> all{focus};
  all.insert(all.end(), petals.begin(), petals.end());
  detail::check_tuple(family.size(), all);
  std::vector<BitVector> masks;
  masks.reserve(petals.size());
  for (auto p : petals) masks.push_back(difference_mask(family[p], family[focus]));
  return detail::pairwise_disjoint(masks);
}

inline bool is_valid(const Family& family, const FocalWitness& w) {
  return is_b_focal(family, w.focus, w.petals, w.side);
}

inline bool is_valid(const QFamily& family, const FocalWitness& w) {
  return w.side == FocalSide::both && is_focal(family, w.focus, w.petals);
}

inline bool is_valid(const Family& family, const NearSunflowerWitness& w) {
  return is_near_sunflower(family, w.indices);
}

}  // namespace sunforge
