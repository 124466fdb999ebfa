#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/exact.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/errors.hpp"
#include "sunforge/search/literal.hpp"

namespace sunforge {

inline constexpr std::uint64_t kBruteForceCountLimit = 10'000'000;

/**
 * Exact number of size-r patterns in {0,1}^n: unordered near-sunflowers for
 * ns; (focus, unordered petals) pairs for the focal kinds. Enumerates every
 * r-subset of the cube.
 */
inline BigInt brute_force_count(std::size_t n, std::size_t r, Kind kind) {
  detail::require_r(r);
  if (n == 0 || n > 16) throw CapExceeded("brute_force_count supports 1 <= n <= 16");
  const std::size_t size = std::size_t{1} << n;
  if (binomial(size, r) > kBruteForceCountLimit)
    throw CapExceeded("C(2^n, r) exceeds the enumeration limit");
  std::uint64_t count = 0;
  std::vector<std::uint32_t> tuple(r);
  literal::for_each_combination(size, r, [&](const std::vector<std::size_t>& c) {
    for (std::size_t i = 0; i < r; ++i) tuple[i] = static_cast<std::uint32_t>(c[i]);
    if (kind == Kind::ns)
      count += literal::near_sunflower(tuple, n) ? 1 : 0;
    else
      count += literal::focal_foci(tuple, n, kind);
    return false;
  });
  return count;
}

/**
 * The same count from the matrix side: ordered r x n matrices with distinct
 * rows whose columns satisfy the pattern condition (row 0 is the focus for
 * focal kinds), divided by the number of row orders that give the same
 * pattern: r! for ns, (r-1)! for focal kinds.
 */
inline BigInt matrix_pattern_count(std::size_t n, std::size_t r, Kind kind) {
  detail::require_r(r);
  if (n == 0 || n > 16) throw CapExceeded("matrix_pattern_count supports 1 <= n <= 16");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (power(size, r) > kBruteForceCountLimit) throw CapExceeded("(2^n)^r exceeds the enumeration limit");
  const int side = literal::side_of(kind);

  auto column_ok = [&](const std::vector<std::uint32_t>& rows, std::size_t i) {
    std::size_t ones = 0;
    for (auto row : rows) ones += literal::entry(row, n, i);
    if (kind == Kind::ns) return ones <= 1 || ones + 1 >= r;
    const unsigned first = literal::entry(rows[0], n, i);
    if (side >= 0 && first != static_cast<unsigned>(side)) return true;
    const std::size_t same = first ? ones - 1 : (r - 1) - ones;
    return same + 2 >= r;
  };

  std::uint64_t ordered = 0;
  std::vector<std::uint32_t> rows(r, 0);
  const std::uint64_t total = power(size, r).convert_to<std::uint64_t>();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t j = 0; j < r; ++j, x /= size) rows[j] = static_cast<std::uint32_t>(x % size);
    bool distinct = true;
    for (std::size_t a = 0; a < r && distinct; ++a)
      for (std::size_t b = 0; b < a && distinct; ++b) distinct = rows[a] != rows[b];
    if (!distinct) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = column_ok(rows, i);
    ordered += ok;
  }
  const BigInt orders = kind == Kind::ns ? factorial(r) : factorial(r - 1);
  if (BigInt(ordered) % orders != 0) throw std::logic_error("ordered pattern count not divisible by row orders");
  return BigInt(ordered) / orders;
}

/**
 * Fraction of the s-subsets S of member A (a k-set) that are own-subsets:
 * S is contained in A and in no other member.
 */
inline Rational own_subset_fraction(const Family& family, std::size_t member, std::size_t s) {
  if (member >= family.size()) throw std::out_of_range("member index out of range");
  const std::size_t k = family[member].count();
  for (const auto& v : family)
    if (v.count() != k) throw std::invalid_argument("own_subset_fraction needs a k-uniform family");
  if (s > k) throw std::invalid_argument("subset size exceeds k");
  if (binomial(k, s) > kBruteForceCountLimit) throw CapExceeded("C(k, s) exceeds the enumeration limit");

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < family.n(); ++i)
    if (family[member].test(i)) support.push_back(i);

  std::uint64_t own = 0;
  std::uint64_t total = 0;
  literal::for_each_combination(k, s, [&](const std::vector<std::size_t>& c) {
    BitVector subset(family.n());
    for (auto i : c) subset.set(support[i]);
    bool contained_elsewhere = false;
    for (std::size_t b = 0; b < family.size() && !contained_elsewhere; ++b)
      contained_elsewhere = b != member && subset.is_subset_of(family[b]);
    own += contained_elsewhere ? 0 : 1;
    ++total;
    return false;
  });
  return Rational(BigInt(own), BigInt(total));
}

}  // namespace sunforge
