#pragma once

/**
 * Closed-form bounds on the extremal functions for near-sunflower-free,
 * focal-free, q-ary focal-free and one-sided focal-free families.
 *
 * Integer and rational values are exact. Real-valued rates use double
 * precision; every constant involved sits far from the test tolerances.
 * o(1) terms are never folded into values: asymptotic bases are reported
 * separately from finite-n quantities.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/exact.hpp"

namespace sunforge {

namespace detail {

inline void require_r(std::size_t r) {
  if (r < 3) throw std::invalid_argument("r must be >= 3, got " + std::to_string(r));
}

inline void require_binary_kind(Kind kind) {
  if (kind != Kind::ns && kind != Kind::ff) throw std::invalid_argument("kind must be ns or ff");
}

}  // namespace detail

/// ceil((r-2) * len / (r-1)): the block-union size and the Reed-Solomon degree bound.
inline std::size_t majority_block_size(std::size_t len, std::size_t r) {
  detail::require_r(r);
  return ceil_div((r - 2) * len, r - 1);
}

/// (r-1) * 2^ceil((r-2)n/(r-1)); no family above this size is focal-free.
inline BigInt upper_ff(std::size_t n, std::size_t r) {
  detail::require_r(r);
  return BigInt(r - 1) << static_cast<unsigned>(majority_block_size(n, r));
}

/// Per-coordinate base of upper_ff: 2^((r-2)/(r-1)).
inline double upper_rate(std::size_t r) {
  detail::require_r(r);
  return std::exp2(static_cast<double>(r - 2) / static_cast<double>(r - 1));
}

/// Base of the alteration lower bound: 2/(r+1)^(1/(r-1)) for ns, 2/r^(1/(r-1)) for ff.
inline double lower_rate(std::size_t r, Kind kind) {
  detail::require_r(r);
  detail::require_binary_kind(kind);
  const double root = 1.0 / static_cast<double>(r - 1);
  const std::size_t inner = kind == Kind::ns ? r + 1 : r;
  return 2.0 / std::pow(static_cast<double>(inner), root);
}

struct QBounds {
  double lower_rate;
  BigInt upper;
};

/// q-ary focal-free bounds: base q/((q-1)(r-1)+1)^(1/(r-1)) and
/// (r-1) * q^ceil((r-2)n/(r-1)).
inline QBounds q_bounds(std::size_t n, std::size_t r, std::size_t q) {
  detail::require_r(r);
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const double root = 1.0 / static_cast<double>(r - 1);
  const std::size_t inner = (q - 1) * (r - 1) + 1;
  QBounds b{static_cast<double>(q) / std::pow(static_cast<double>(inner), root),
            BigInt(r - 1) * power(q, majority_block_size(n, r))};
  return b;
}

inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Exponent h(1/2 - sqrt(delta(1-delta))) of the linear-programming bound on
/// codes with minimum distance above delta*n, without the o(1) term.
inline double mrrw_rate(double delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw std::domain_error("mrrw_rate: delta must lie in [0, 1/2]");
  const double arg = 0.5 - std::sqrt(delta * (1.0 - delta));
  return binary_entropy(std::max(arg, 0.0));
}

/// (r-1) * C(n, m) / C(k, m) with m = ceil((r-2)k/(r-1)).
inline Rational one_sided_uniform_upper(std::size_t n, std::size_t k, std::size_t r) {
  detail::require_r(r);
  if (k > n) throw std::invalid_argument("one_sided_uniform_upper: k must be <= n");
  const std::size_t m = majority_block_size(k, r);
  return Rational(BigInt(r - 1) * binomial(n, m), binomial(k, m));
}

/// 1 + (r-2)/(r-1)^((r-1)/(r-2)).
inline double one_sided_base(std::size_t r) {
  detail::require_r(r);
  const double a = static_cast<double>(r - 2);
  const double b = static_cast<double>(r - 1);
  return 1.0 + a / std::pow(b, b / a);
}

struct OneSidedTotal {
  Rational sum;
  double asymptotic_base;
};

/// Sum over k of the uniform bound, plus its exponential base.
inline OneSidedTotal one_sided_total_upper(std::size_t n, std::size_t r) {
  detail::require_r(r);
  Rational sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t m = majority_block_size(k, r);
    sum += Rational(binomial(n, m), binomial(k, m));
  }
  sum *= r - 1;
  return {sum, one_sided_base(r)};
}

/// 2h(x)/(1+2x): log2 of the per-element growth of the k-uniform bound at x = t/(2(k-t)).
inline double theorem_k_exponent(double x) { return 2.0 * binary_entropy(x) / (1.0 + 2.0 * x); }

struct KRate {
  double x_star;
  double base;
};

/// Root of x = (1-x)^3 in (0, 1/2) by bisection, and 2^(2h(x)/(1+2x)) there.
inline KRate theorem_k_rate() {
  double lo = 0.0;
  double hi = 0.5;
  // x - (1-x)^3 is increasing, negative at 0 and positive at 1/2.
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g = mid - (1.0 - mid) * (1.0 - mid) * (1.0 - mid);
    if (g < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return {x, std::exp2(theorem_k_exponent(x))};
}

/// Sum_{j=0}^{t+1} C(2(k-t), j).
inline BigInt theorem_k_sum(std::size_t k, std::size_t t) {
  if (t > k) throw std::invalid_argument("theorem_k_sum: t must be <= k");
  BigInt sum = 0;
  for (std::size_t j = 0; j <= t + 1; ++j) sum += binomial(2 * (k - t), j);
  return sum;
}

/// Upper bound on the number of size-r patterns in {0,1}^n:
/// (2r+2)^n / r! for ns, (2r)^n / (r-1)! for ff.
inline Rational count_bound(std::size_t n, std::size_t r, Kind kind) {
  detail::require_r(r);
  detail::require_binary_kind(kind);
  if (kind == Kind::ns) return Rational(power(2 * r + 2, n), factorial(r));
  return Rational(power(2 * r, n), factorial(r - 1));
}

}  // namespace sunforge
