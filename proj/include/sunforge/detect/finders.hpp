#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/detect/predicates.hpp"
#include "sunforge/detect/witness.hpp"

namespace sunforge {

/**
 * Lexicographically first r-subset of members forming a near-sunflower.
 *
 * Depth-first over increasing index tuples. A partial tuple is abandoned as
 * soon as some column holds at least two 1s and at least two 0s: such a
 * column can end with neither <= 1 nor >= r-1 ones, however the tuple is
 * completed. Equivalently, the column count c is in [2, r-2] and fewer than
 * r-1-c picks remain.
 */
inline std::optional<NearSunflowerWitness> find_near_sunflower(const Family& family, std::size_t r) {
  detail::require_tuple_size(r);
  const std::size_t m = family.size();
  if (m < r) return std::nullopt;
  const std::size_t words = BitVector(family.n()).word_size();

  // state[d] = column saturation after d picks.
  std::vector<std::vector<detail::SaturatingColumns>> state(r + 1, std::vector<detail::SaturatingColumns>(words));
  std::vector<std::size_t> chosen(r);

  auto extend = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == r) return true;
    for (std::size_t j = start; j + (r - depth) <= m; ++j) {
      const auto& v = family[j];
      bool dead = false;
      for (std::size_t w = 0; w < words; ++w) {
        auto cols = state[depth][w];
        cols.add(v.words()[w], v.valid_mask(w));
        if (cols.split()) {
          dead = true;
          break;
        }
        state[depth + 1][w] = cols;
      }
      if (dead) continue;
      chosen[depth] = j;
      if (self(self, depth + 1, j + 1)) return true;
    }
    return false;
  };

  if (!extend(extend, 0, 0)) return std::nullopt;
  return NearSunflowerWitness{chosen};
}

namespace detail {

/// Picks `needed` pairwise-disjoint masks from `candidates` (in order),
/// starting from an already-occupied union. Returns positions into
/// `candidates`, lexicographically first.
inline std::optional<std::vector<std::size_t>> pick_disjoint(const std::vector<BitVector>& candidates,
                                                             std::size_t needed, const BitVector& occupied) {
  std::vector<std::size_t> picked;

  auto search = [&](auto&& self, const std::vector<std::size_t>& avail, const BitVector& used) -> bool {
    if (picked.size() == needed) return true;
    const std::size_t still = needed - picked.size();
    for (std::size_t a = 0; a + still <= avail.size(); ++a) {
      const auto& mask = candidates[avail[a]];
      BitVector next_used = used | mask;
      std::vector<std::size_t> next;
      next.reserve(avail.size() - a);
      for (std::size_t b = a + 1; b < avail.size(); ++b)
        if (!next_used.intersects(candidates[avail[b]])) next.push_back(avail[b]);
      if (next.size() + 1 < still) continue;
      picked.push_back(avail[a]);
      if (self(self, next, next_used)) return true;
      picked.pop_back();
    }
    return false;
  };

  std::vector<std::size_t> start;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!occupied.intersects(candidates[i])) start.push_back(i);
  if (!search(search, start, occupied)) return std::nullopt;
  return picked;
}

template <class MaskFn>
std::optional<FocalWitness> find_focal_by_masks(std::size_t m, std::size_t n, std::size_t r, FocalSide side,
                                               MaskFn&& mask_of) {
  require_tuple_size(r);
  if (m < r) return std::nullopt;
  for (std::size_t focus = 0; focus < m; ++focus) {
    std::vector<BitVector> masks;
    std::vector<std::size_t> owner;
    masks.reserve(m - 1);
    owner.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == focus) continue;
      masks.push_back(mask_of(focus, j));
      owner.push_back(j);
    }
    if (auto picked = pick_disjoint(masks, r - 1, BitVector(n))) {
      FocalWitness w{focus, {}, side};
      for (auto p : *picked) w.petals.push_back(owner[p]);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First (focus, petals) forming a focal (or b-focal) family of size r.
/// Foci are tried in index order; petals are the lexicographically first
/// set of r-1 members whose difference masks are pairwise disjoint.
inline std::optional<FocalWitness> find_focal(const Family& family, std::size_t r, FocalSide side = FocalSide::both) {
  return detail::find_focal_by_masks(family.size(), family.n(), r, side, [&](std::size_t f, std::size_t j) {
    return (family[j] ^ family[f]) & detail::side_mask(family[f], side);
  });
}

inline std::optional<FocalWitness> find_focal(const QFamily& family, std::size_t r) {
  return detail::find_focal_by_masks(family.size(), family.n(), r, FocalSide::both,
                                     [&](std::size_t f, std::size_t j) { return difference_mask(family[j], family[f]); });
}

/// Thrown when a family is not larger than the focal-free upper bound.
class BoundNotExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Consecutive blocks A_1..A_{r-1} of [n] with sizes floor or ceil of n/(r-1).
inline std::vector<BitVector> balanced_partition(std::size_t n, std::size_t parts) {
  std::vector<BitVector> blocks;
  std::size_t start = 0;
  for (std::size_t j = 0; j < parts; ++j) {
    const std::size_t len = n / parts + (j < n % parts ? 1 : 0);
    BitVector block(n);
    for (std::size_t i = start; i < start + len; ++i) block.set(i);
    blocks.push_back(std::move(block));
    start += len;
  }
  return blocks;
}

/**
 * Extracts a focal family of size r from a family above the upper bound.
 *
 * Partition the coordinates into r-1 balanced blocks. For block j, group the
 * members by their projection outside block j; a member alone in its group
 * is unique for that block. Each grouping has at most 2^ceil((r-2)n/(r-1))
 * unique members, so some member x0 is unique for no block. Its group-mate
 * for block j differs from x0 only inside block j, and those petals form a
 * focal family with focus x0.
 */
inline FocalWitness extract_focal_from_large(const Family& family, std::size_t r) {
  detail::require_tuple_size(r);
  const std::size_t n = family.n();
  const BigInt threshold = upper_ff(n, r);
  if (BigInt(family.size()) <= threshold)
    throw BoundNotExceeded("family size " + std::to_string(family.size()) + " does not exceed (r-1)*2^ceil((r-2)n/(r-1)) = " +
                           threshold.str());

  const auto blocks = balanced_partition(n, r - 1);
  const std::size_t m = family.size();
  // first_mate[j][i]: smallest other member sharing member i's projection outside block j.
  std::vector<std::vector<std::optional<std::size_t>>> first_mate(r - 1, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t j = 0; j < r - 1; ++j) {
    const BitVector outside = ~blocks[j];
    std::unordered_map<BitVector, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[family[i] & outside].push_back(i);
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      for (auto i : members) first_mate[j][i] = members[0] == i ? members[1] : members[0];
    }
  }

  for (std::size_t x0 = 0; x0 < m; ++x0) {
    bool everywhere = true;
    for (std::size_t j = 0; j < r - 1 && everywhere; ++j) everywhere = first_mate[j][x0].has_value();
    if (!everywhere) continue;
    FocalWitness w{x0, {}, FocalSide::both};
    for (std::size_t j = 0; j < r - 1; ++j) w.petals.push_back(*first_mate[j][x0]);
    if (!is_focal(family, w.focus, w.petals))
      throw std::logic_error("extract_focal_from_large produced an invalid witness");
    return w;
  }
  throw std::logic_error("no member is non-unique for every block; counting argument violated");
}

}  // namespace sunforge
