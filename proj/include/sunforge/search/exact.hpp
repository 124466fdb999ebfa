#pragma once

/**
 * Exact extremal values g(n) for tiny n.
 *
 * Branch and bound over the universe (all of {0,1}^n, or its k-uniform
 * layer) in lexicographic order, include-branch first. A vector is included
 * only if it forms no violating r-tuple with r-1 already included vectors.
 * A branch is cut when even including every remaining vector cannot beat
 * the best family so far, and the whole search stops once the best family
 * reaches a known upper bound.
 *
 * For ns and ff on the full cube, translating a family by XOR with a fixed
 * vector preserves both patterns (column counts c become r-c in flipped
 * columns; difference masks are unchanged), so an optimal family can be
 * assumed to contain the all-zero vector. One-sided kinds have no such
 * symmetry and are searched without it.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/errors.hpp"
#include "sunforge/search/literal.hpp"

namespace sunforge {

struct SearchResult {
  std::size_t n = 0;
  std::size_t r = 0;
  /// Uniformity of the universe; absent for the full cube.
  std::optional<std::size_t> k;
  Kind kind = Kind::ns;
  std::size_t value = 0;
  Family witness{1};
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kExactSearchMaxN = 5;

namespace detail {

inline Family unpack(const std::vector<std::uint32_t>& members, std::size_t n) {
  Family f(n);
  for (auto x : members) f.insert(BitVector::from_integer(n, x));
  return f;
}

inline std::size_t cap_bound(const BigInt& bound, std::size_t universe) {
  return bound >= universe ? universe : bound.convert_to<std::size_t>();
}

inline std::size_t floor_of(const Rational& x) {
  return BigInt(boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x)).convert_to<std::size_t>();
}

class BranchAndBound {
 public:
  BranchAndBound(std::vector<std::uint32_t> universe, std::size_t n, std::size_t r, Kind kind, std::size_t bound,
                 bool zero_first)
      : universe_(std::move(universe)), n_(n), r_(r), kind_(kind), bound_(bound), zero_first_(zero_first) {}

  SearchResult run() {
    if (zero_first_ && !universe_.empty()) {
      // Families containing the all-zero vector (universe_[0]) suffice.
      current_.push_back(universe_[0]);
      descend(1);
    } else {
      descend(0);
    }
    SearchResult result;
    result.n = n_;
    result.r = r_;
    result.kind = kind_;
    result.value = best_.size();
    result.witness = unpack(best_, n_);
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  bool fits(std::uint32_t v) {
    if (current_.size() + 1 < r_) return true;
    std::vector<std::uint32_t> tuple(r_);
    tuple[r_ - 1] = v;
    return !literal::for_each_combination(current_.size(), r_ - 1, [&](const std::vector<std::size_t>& c) {
      for (std::size_t i = 0; i + 1 < r_; ++i) tuple[i] = current_[c[i]];
      return literal::violates(tuple, n_, kind_);
    });
  }

  void descend(std::size_t pos) {
    ++nodes_;
    if (best_.size() >= bound_) return;
    if (current_.size() + (universe_.size() - pos) <= best_.size()) return;
    if (pos == universe_.size()) {
      best_ = current_;
      return;
    }
    const std::uint32_t v = universe_[pos];
    if (fits(v)) {
      current_.push_back(v);
      descend(pos + 1);
      current_.pop_back();
    }
    descend(pos + 1);
  }

  std::vector<std::uint32_t> universe_;
  std::size_t n_;
  std::size_t r_;
  Kind kind_;
  std::size_t bound_;
  bool zero_first_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint64_t nodes_ = 0;
};

inline std::vector<std::uint32_t> cube(std::size_t n) {
  std::vector<std::uint32_t> u(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < u.size(); ++x) u[x] = x;
  return u;
}

inline std::vector<std::uint32_t> layer(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> u;
  for (std::uint32_t x = 0; x < (1U << n); ++x)
    if (static_cast<std::size_t>(std::popcount(x)) == k) u.push_back(x);
  return u;
}

}  // namespace detail

/// Maximum size of a subfamily of {0,1}^n without the size-r pattern `kind`.
inline SearchResult exact_g(std::size_t n, std::size_t r, Kind kind, std::size_t max_n = kExactSearchMaxN) {
  detail::require_r(r);
  if (n == 0) throw std::invalid_argument("exact_g needs n >= 1");
  if (n > max_n) throw CapExceeded("exact_g supports n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  auto universe = detail::cube(n);
  std::size_t bound = detail::cap_bound(upper_ff(n, r), universe.size());
  if (kind == Kind::bff0 || kind == Kind::bff1)
    bound = std::min(bound, detail::floor_of(one_sided_total_upper(n, r).sum));
  const bool symmetric = kind == Kind::ns || kind == Kind::ff;
  return detail::BranchAndBound(std::move(universe), n, r, kind, bound, symmetric).run();
}

/// Same, restricted to the k-element subsets of [n].
inline SearchResult exact_g_uniform(std::size_t n, std::size_t k, std::size_t r, Kind kind, std::size_t max_n = 7) {
  detail::require_r(r);
  if (n == 0 || k > n) throw std::invalid_argument("exact_g_uniform needs 1 <= n and k <= n");
  if (n > max_n) throw CapExceeded("exact_g_uniform supports n <= " + std::to_string(max_n));
  auto universe = detail::layer(n, k);
  std::size_t bound = detail::cap_bound(upper_ff(n, r), universe.size());
  if (kind == Kind::bff1) bound = std::min(bound, detail::floor_of(one_sided_uniform_upper(n, k, r)));
  if (kind == Kind::bff0) bound = std::min(bound, detail::floor_of(one_sided_uniform_upper(n, n - k, r)));
  auto result = detail::BranchAndBound(std::move(universe), n, r, kind, bound, false).run();
  result.k = k;
  return result;
}

/**
 * Plain exhaustive maximum: every subfamily of {0,1}^n is tested against the
 * list of violating r-subsets. No ordering, bounding or symmetry. n <= 4.
 */
inline std::size_t exact_g_unpruned(std::size_t n, std::size_t r, Kind kind) {
  detail::require_r(r);
  if (n == 0 || n > 4) throw CapExceeded("exact_g_unpruned supports 1 <= n <= 4");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> bad;  // violating r-subsets as masks over the universe
  std::vector<std::uint32_t> tuple(r);
  literal::for_each_combination(size, r, [&](const std::vector<std::size_t>& c) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < r; ++i) {
      tuple[i] = static_cast<std::uint32_t>(c[i]);
      mask |= 1U << c[i];
    }
    if (literal::violates(tuple, n, kind)) bad.push_back(mask);
    return false;
  });
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << size); ++subset) {
    const auto s = static_cast<std::uint32_t>(subset);
    bool clean = true;
    for (auto b : bad)
      if ((s & b) == b) {
        clean = false;
        break;
      }
    if (clean) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

}  // namespace sunforge
