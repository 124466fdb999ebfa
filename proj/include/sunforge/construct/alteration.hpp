#pragma once

/**
 * Random choice with alterations.
 *
 * Every vector of {0,1}^n is kept independently with probability p, then
 * members of violating r-tuples are deleted until none remains. With
 * M the count bound for the pattern, the expected final size is at least
 * 2^n p - M p^r, maximised at p* = (2^n / (r M))^(1/(r-1)).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/detect/finders.hpp"
#include "sunforge/errors.hpp"
#include "sunforge/rng.hpp"

namespace sunforge {

namespace detail {

/// ln of the count bound M: (2r+2)^n / r! for ns, (2r)^n / (r-1)! for ff.
inline double log_count_bound(std::size_t n, std::size_t r, Kind kind) {
  require_binary_kind(kind);
  const double rd = static_cast<double>(r);
  if (kind == Kind::ns) return static_cast<double>(n) * std::log(2.0 * rd + 2.0) - std::lgamma(rd + 1.0);
  return static_cast<double>(n) * std::log(2.0 * rd) - std::lgamma(rd);
}

}  // namespace detail

/// Maximiser of 2^n p - M p^r, clamped to (0, 1].
inline double optimal_p(std::size_t n, std::size_t r, Kind kind) {
  detail::require_r(r);
  const double log_p = (static_cast<double>(n) * std::log(2.0) - std::log(static_cast<double>(r)) -
                        detail::log_count_bound(n, r, kind)) /
                       static_cast<double>(r - 1);
  return std::clamp(std::exp(log_p), std::numeric_limits<double>::min(), 1.0);
}

/// Lower bound 2^n p - M p^r on the expected size after alterations.
inline double expected_size_lower_bound(std::size_t n, std::size_t r, Kind kind, double p) {
  if (p <= 0.0) return 0.0;
  const double log_p = std::log(p);
  return std::exp(static_cast<double>(n) * std::log(2.0) + log_p) -
         std::exp(detail::log_count_bound(n, r, kind) + static_cast<double>(r) * log_p);
}

struct AlterationTrace {
  std::uint64_t seed = 0;
  double p_used = 0.0;
  std::size_t n = 0;
  std::size_t r = 0;
  Kind kind = Kind::ns;
  std::size_t initial_size = 0;
  std::size_t removals = 0;
  std::size_t violations_found = 0;
};

struct AlterationResult {
  Family family;
  AlterationTrace trace;
};

struct AlterationOptions {
  /// Explicit inclusion probability; optimal_p when absent.
  std::optional<double> p;
  /// Upper limit on the expected sample size 2^n p.
  double expected_size_cap = 2048.0;
};

/**
 * Samples the cube with the counter-based stream (vector x, read as an
 * integer with coordinate 1 most significant, is kept iff uniform(x) < p),
 * then repeatedly finds a violating tuple and deletes its highest-index
 * member. The result is certified violation-free by the finder.
 */
inline AlterationResult random_with_alterations(std::size_t n, std::size_t r, Kind kind, std::uint64_t seed,
                                                const AlterationOptions& options = {}) {
  detail::require_r(r);
  detail::require_binary_kind(kind);
  if (n == 0 || n > 24) throw CapExceeded("random_with_alterations supports 1 <= n <= 24");
  const double p = options.p.value_or(optimal_p(n, r, kind));
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inclusion probability must lie in [0, 1]");
  const double expected = std::ldexp(p, static_cast<int>(n));
  if (expected > options.expected_size_cap)
    throw CapExceeded("expected sample size " + std::to_string(expected) + " exceeds cap " +
                      std::to_string(options.expected_size_cap));

  AlterationResult result{Family(n), AlterationTrace{seed, p, n, r, kind, 0, 0, 0}};
  const CounterRng rng(seed);
  const std::uint64_t universe = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < universe; ++x)
    if (rng.uniform_at(x) < p) result.family.insert(BitVector::from_integer(n, x));
  result.trace.initial_size = result.family.size();

  auto violation = [&]() -> std::optional<std::size_t> {
    if (kind == Kind::ns) {
      if (auto w = find_near_sunflower(result.family, r)) return *std::max_element(w->indices.begin(), w->indices.end());
    } else if (auto w = find_focal(result.family, r)) {
      auto idx = w->indices();
      return *std::max_element(idx.begin(), idx.end());
    }
    return std::nullopt;
  };

  while (auto victim = violation()) {
    ++result.trace.violations_found;
    result.family.erase(*victim);
    ++result.trace.removals;
  }
  return result;
}

}  // namespace sunforge
