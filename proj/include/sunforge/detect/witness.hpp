#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace sunforge {

/// Which coordinates a focal condition constrains: all of them, or only
/// those where the focus holds 0 (resp. 1).
enum class FocalSide { both, zero, one };

inline std::string_view to_string(FocalSide side) {
  switch (side) {
    case FocalSide::both: return "focal";
    case FocalSide::zero: return "0-focal";
    case FocalSide::one: return "1-focal";
  }
  return "?";
}

inline FocalSide side_for_bit(unsigned b) { return b == 0 ? FocalSide::zero : FocalSide::one; }

struct NearSunflowerWitness {
  std::vector<std::size_t> indices;

  friend bool operator==(const NearSunflowerWitness&, const NearSunflowerWitness&) = default;
};

struct FocalWitness {
  std::size_t focus = 0;
  std::vector<std::size_t> petals;
  FocalSide side = FocalSide::both;

  /// focus followed by the petals.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> all{focus};
    all.insert(all.end(), petals.begin(), petals.end());
    return all;
  }

  friend bool operator==(const FocalWitness&, const FocalWitness&) = default;
};

/// Three member pairs whose symmetric differences are pairwise disjoint.
struct DisjointPairsWitness {
  std::array<std::pair<std::size_t, std::size_t>, 3> pairs;

  std::vector<std::size_t> indices() const {
    return {pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second, pairs[2].first, pairs[2].second};
  }

  friend bool operator==(const DisjointPairsWitness&, const DisjointPairsWitness&) = default;
};

}  // namespace sunforge
