#pragma once

// Disjoint symmetric differences: the three-pair search, its application to
// linear codes, and the pairwise condition on k-uniform families.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/detect/predicates.hpp"
#include "sunforge/detect/witness.hpp"
#include "sunforge/errors.hpp"

namespace sunforge {

/// Whether the three pairs must use six different members (`distinct`) or
/// may share members across pairs (`allowed`).
enum class MemberSharing { distinct, allowed };

inline bool is_valid(const Family& family, const DisjointPairsWitness& w, MemberSharing sharing = MemberSharing::distinct) {
  const auto idx = w.indices();
  for (auto i : idx)
    if (i >= family.size()) return false;
  for (const auto& [a, b] : w.pairs)
    if (a == b) return false;
  if (sharing == MemberSharing::distinct) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (idx[a] == idx[b]) return false;
  }
  std::vector<BitVector> diffs;
  for (const auto& [a, b] : w.pairs) diffs.push_back(family[a] ^ family[b]);
  return detail::pairwise_disjoint(diffs);
}

namespace detail {

/// Members grouped by their projection onto `mask`, in order of first appearance.
inline std::vector<std::vector<std::size_t>> group_by_projection(const Family& family, const BitVector& mask,
                                                                 const std::vector<bool>& excluded) {
  std::unordered_map<BitVector, std::size_t> slot;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (excluded[i]) continue;
    auto [it, added] = slot.try_emplace(family[i] & mask, groups.size());
    if (added) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

/// Closest pair among `members` (all O(m^2) pairs), ties to the smallest indices.
inline std::optional<std::pair<std::size_t, std::size_t>> closest_pair(const Family& family,
                                                                       const std::vector<std::size_t>& members) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const auto d = hamming_distance(family[members[a]], family[members[b]]);
      if (d < best_d) {
        best_d = d;
        best = std::pair{members[a], members[b]};
      }
    }
  return best;
}

/// Lexicographically first pair inside a group of size >= 2, over all groups.
inline std::optional<std::pair<std::size_t, std::size_t>> first_colliding_pair(
    const std::vector<std::vector<std::size_t>>& groups) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& g : groups)
    if (g.size() >= 2 && (!best || std::pair{g[0], g[1]} < *best)) best = std::pair{g[0], g[1]};
  return best;
}

inline std::optional<DisjointPairsWitness> three_pairs_greedy(const Family& family, MemberSharing sharing) {
  const std::size_t m = family.size();
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  std::vector<bool> excluded(m, false);
  const bool distinct = sharing == MemberSharing::distinct;

  // Closest pair overall.
  auto ab = closest_pair(family, all);
  if (!ab) return std::nullopt;
  const BitVector d1 = family[ab->first] ^ family[ab->second];
  if (distinct) excluded[ab->first] = excluded[ab->second] = true;

  // Largest class of members agreeing on d1; its closest pair differs only outside d1.
  auto groups = group_by_projection(family, d1, excluded);
  const std::vector<std::size_t>* largest = nullptr;
  for (const auto& g : groups)
    if (!largest || g.size() > largest->size()) largest = &g;
  if (!largest || largest->size() < 2) return std::nullopt;
  auto cd = closest_pair(family, *largest);
  const BitVector d2 = family[cd->first] ^ family[cd->second];
  if (distinct) excluded[cd->first] = excluded[cd->second] = true;

  // Any two members agreeing on d1 | d2.
  auto ef = first_colliding_pair(group_by_projection(family, d1 | d2, excluded));
  if (!ef) return std::nullopt;
  return DisjointPairsWitness{{*ab, *cd, *ef}};
}

inline std::optional<DisjointPairsWitness> three_pairs_exhaustive(const Family& family, MemberSharing sharing) {
  const std::size_t m = family.size();
  const bool distinct = sharing == MemberSharing::distinct;
  std::vector<bool> excluded(m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const BitVector d1 = family[a] ^ family[b];
      if (distinct) excluded[a] = excluded[b] = true;
      // (C, D) with C xor D disjoint from d1 means C, D agree on d1.
      for (const auto& g : group_by_projection(family, d1, excluded)) {
        for (std::size_t c = 0; c < g.size(); ++c)
          for (std::size_t d = c + 1; d < g.size(); ++d) {
            const BitVector u = d1 | (family[g[c]] ^ family[g[d]]);
            if (distinct) excluded[g[c]] = excluded[g[d]] = true;
            auto ef = first_colliding_pair(group_by_projection(family, u, excluded));
            if (distinct) excluded[g[c]] = excluded[g[d]] = false;
            if (ef) return DisjointPairsWitness{{std::pair{a, b}, std::pair{g[c], g[d]}, *ef}};
          }
      }
      if (distinct) excluded[a] = excluded[b] = false;
    }
  return std::nullopt;
}

}  // namespace detail

/// Families up to this size fall back to exhaustive search when the greedy
/// closest-pair procedure fails.
inline constexpr std::size_t kExhaustiveSymdiffLimit = 512;

/**
 * Three member pairs with pairwise disjoint symmetric differences.
 *
 * First a distance-greedy procedure: take a closest pair (A, B); among the
 * members agreeing on A xor B take a largest class and its closest pair
 * (C, D); then any two members agreeing on (A xor B) | (C xor D). If that
 * fails and the family has at most 512 members, every pair-of-pairs is
 * tried, so the answer is complete there.
 */
inline std::optional<DisjointPairsWitness> find_three_disjoint_symdiffs(const Family& family,
                                                                        MemberSharing sharing = MemberSharing::distinct) {
  if (auto w = detail::three_pairs_greedy(family, sharing)) {
    if (!is_valid(family, *w, sharing)) throw std::logic_error("three-pair procedure produced an invalid witness");
    return w;
  }
  if (family.size() <= kExhaustiveSymdiffLimit) return detail::three_pairs_exhaustive(family, sharing);
  return std::nullopt;
}

/// Whether `basis` is linearly independent over GF(2).
inline bool is_independent(const std::vector<BitVector>& basis) {
  std::vector<BitVector> rows;
  std::vector<std::size_t> pivots;
  for (auto v : basis) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v.test(pivots[i])) v ^= rows[i];
    if (v.none()) return false;
    std::size_t pivot = 0;
    while (!v.test(pivot)) ++pivot;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].test(pivot)) rows[i] ^= v;
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
  }
  return true;
}

/// All 2^dim codewords; codeword i is the XOR of basis vectors at the set bits of i.
inline Family span_code(const std::vector<BitVector>& basis) {
  if (basis.empty()) throw std::invalid_argument("span_code: empty basis");
  if (basis.size() > 20) throw CapExceeded("span_code: dimension above 20");
  const std::size_t n = basis.front().size();
  Family code(n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
    BitVector c(n);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if ((i >> j) & 1U) c ^= basis[j];
    if (!code.insert(std::move(c))) throw std::invalid_argument("span_code: basis is linearly dependent");
  }
  return code;
}

struct LinearFocalResult {
  Family code;
  DisjointPairsWitness pairs;
  /// Focus is the zero codeword; petals are the three disjoint differences.
  FocalWitness witness;
};

/// A focal family of size 4 inside the linear code spanned by `basis`, with
/// the zero codeword as focus.
inline LinearFocalResult focal_from_linear(const std::vector<BitVector>& basis) {
  if (!is_independent(basis)) throw std::invalid_argument("focal_from_linear: basis is linearly dependent");
  Family code = span_code(basis);
  auto pairs = find_three_disjoint_symdiffs(code);
  if (!pairs) throw NoWitnessFound("no three pairwise disjoint symmetric differences in the code");

  FocalWitness w{*code.index_of(BitVector(code.n())), {}, FocalSide::both};
  for (const auto& [a, b] : pairs->pairs) {
    auto idx = code.index_of(code[a] ^ code[b]);
    if (!idx) throw std::logic_error("code is not closed under XOR");
    w.petals.push_back(*idx);
  }
  std::sort(w.petals.begin(), w.petals.end());
  if (!is_focal(code, w.focus, w.petals)) throw std::logic_error("focal_from_linear produced an invalid witness");
  return {std::move(code), *pairs, std::move(w)};
}

/// No two member pairs on four distinct members have disjoint symmetric differences.
inline bool check_pairwise_symdiff_condition(const Family& family) {
  const std::size_t m = family.size();
  std::vector<bool> excluded(m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      excluded[a] = excluded[b] = true;
      // C xor D misses A xor B iff C and D agree on A xor B.
      bool collide = detail::first_colliding_pair(detail::group_by_projection(family, family[a] ^ family[b], excluded))
                         .has_value();
      excluded[a] = excluded[b] = false;
      if (collide) return false;
    }
  return true;
}

struct KUniformReport {
  std::size_t k = 0;
  /// Largest intersection over pairs of distinct members.
  std::size_t t = 0;
  BigInt rhs;
  bool holds = true;
  /// The map C -> [C & (A xor B)]_t over the other members is injective.
  bool map_injective = true;
};

/**
 * Checks |F| - 2 <= sum_{j<=t+1} C(2(k-t), j) for a k-uniform family with
 * pairwise intersecting symmetric differences, and verifies the underlying
 * injection directly: with (A, B) the first pair of maximum intersection t,
 * each other member C maps to C & (A xor B), truncated to its t+1 lowest
 * coordinates when larger than t.
 */
inline KUniformReport theorem_k_inequality_check(const Family& family) {
  const std::size_t m = family.size();
  KUniformReport report;
  if (m == 0) return report;
  report.k = family[0].count();
  for (const auto& v : family)
    if (v.count() != report.k) throw std::invalid_argument("family is not k-uniform");
  if (!check_pairwise_symdiff_condition(family))
    throw std::invalid_argument("family has two member pairs with disjoint symmetric differences");
  if (m < 2) {
    report.t = report.k;
    report.rhs = theorem_k_sum(report.k, report.k);
    return report;
  }

  std::pair<std::size_t, std::size_t> ab{0, 1};
  std::size_t t = 0;
  bool first = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t inter = (family[a] & family[b]).count();
      if (first || inter > t) {
        t = inter;
        ab = {a, b};
        first = false;
      }
    }
  report.t = t;
  report.rhs = theorem_k_sum(report.k, t);
  report.holds = BigInt(m) - 2 <= report.rhs;

  const BitVector d = family[ab.first] ^ family[ab.second];
  std::unordered_set<BitVector> images;
  for (std::size_t c = 0; c < m; ++c) {
    if (c == ab.first || c == ab.second) continue;
    BitVector e = family[c] & d;
    if (e.count() > t) {
      BitVector trimmed(family.n());
      std::size_t kept = 0;
      for (std::size_t i = 0; i < family.n() && kept < t + 1; ++i)
        if (e.test(i)) {
          trimmed.set(i);
          ++kept;
        }
      e = trimmed;
    }
    if (!images.insert(e).second) report.map_injective = false;
  }
  return report;
}

}  // namespace sunforge
