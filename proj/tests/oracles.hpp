#pragma once

// Coordinate-by-coordinate reference predicates for tests, written straight
// from the definitions with no word-level tricks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "sunforge/bitfam/family.hpp"

namespace oracle {

using sunforge::BitVector;
using sunforge::Family;

inline std::size_t ones_in_column(const Family& f, const std::vector<std::size_t>& tuple, std::size_t i) {
  std::size_t c = 0;
  for (auto t : tuple) c += f[t].test(i) ? 1 : 0;
  return c;
}

inline bool near_sunflower(const Family& f, const std::vector<std::size_t>& tuple) {
  const std::size_t r = tuple.size();
  for (std::size_t i = 0; i < f.n(); ++i) {
    const std::size_t c = ones_in_column(f, tuple, i);
    if (c != 0 && c != 1 && c != r - 1 && c != r) return false;
  }
  return true;
}

inline bool sunflower(const Family& f, const std::vector<std::size_t>& tuple) {
  const std::size_t r = tuple.size();
  for (std::size_t i = 0; i < f.n(); ++i) {
    const std::size_t c = ones_in_column(f, tuple, i);
    if (c != 0 && c != 1 && c != r) return false;
  }
  return true;
}

/// side: -1 every coordinate, else only where the focus equals side.
inline bool focal(const Family& f, std::size_t focus, const std::vector<std::size_t>& petals, int side = -1) {
  for (std::size_t i = 0; i < f.n(); ++i) {
    const bool x = f[focus].test(i);
    if (side >= 0 && x != (side == 1)) continue;
    std::size_t differ = 0;
    for (auto p : petals) differ += f[p].test(i) != x ? 1 : 0;
    if (differ > 1) return false;
  }
  return true;
}

inline BitVector random_vector(std::size_t n, std::mt19937_64& gen, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, coin(gen));
  return v;
}

/// A family of `size` distinct random vectors (size must not exceed 2^n).
inline Family random_family(std::size_t n, std::size_t size, std::mt19937_64& gen, double density = 0.5) {
  Family f(n);
  while (f.size() < size) f.insert(random_vector(n, gen, density));
  return f;
}

/// Uniformly random k-subset of {0..m-1}, sorted.
inline std::vector<std::size_t> random_tuple(std::size_t m, std::size_t k, std::mt19937_64& gen) {
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), gen);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

/// Every k-subset of {0..m-1} in lexicographic order, as a list.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Lexicographically first near-sunflower r-subset, by plain enumeration.
inline std::optional<std::vector<std::size_t>> first_near_sunflower(const Family& f, std::size_t r) {
  for (const auto& t : all_subsets(f.size(), r))
    if (near_sunflower(f, t)) return t;
  return std::nullopt;
}

/// Whether any (focus, r-1 petals) choice is (b-)focal.
inline bool has_focal(const Family& f, std::size_t r, int side = -1) {
  for (std::size_t focus = 0; focus < f.size(); ++focus) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != focus) others.push_back(j);
    for (const auto& t : all_subsets(others.size(), r - 1)) {
      std::vector<std::size_t> petals;
      for (auto i : t) petals.push_back(others[i]);
      if (focal(f, focus, petals, side)) return true;
    }
  }
  return false;
}

inline Family cube(std::size_t n) {
  Family f(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) f.insert(BitVector::from_integer(n, x));
  return f;
}

inline Family family_of(std::initializer_list<const char*> rows) {
  std::vector<BitVector> v;
  for (auto r : rows) v.push_back(BitVector::from_string(r));
  return Family(v.front().size(), v);
}

}  // namespace oracle
