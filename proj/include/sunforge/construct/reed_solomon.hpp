#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunforge/bitfam/family.hpp"
#include "sunforge/bounds/formulas.hpp"
#include "sunforge/construct/field.hpp"
#include "sunforge/errors.hpp"
#include "sunforge/rng.hpp"

namespace sunforge {

struct ReedSolomonOptions {
  /// Largest family emitted in full.
  std::uint64_t cap = std::uint64_t{1} << 20;
  /// Above the cap, emit `cap` distinct uniformly sampled polynomials instead of failing.
  bool allow_sampling = false;
  std::uint64_t seed = 0;
};

/// Degree bound d = ceil((r-2)n/(r-1)): polynomials of degree < d are used.
inline std::size_t reed_solomon_degree_bound(std::size_t n, std::size_t r) { return majority_block_size(n, r); }

/**
 * Evaluations of every polynomial of degree < d over GF(q) at the first n
 * field elements (canonical order). Two distinct members agree on at most
 * d-1 coordinates, while a focal family of size r would force some petal to
 * agree with the focus on at least d of them; so the family is focal-free.
 *
 * Polynomial number i has coefficient of x^t equal to the field element
 * indexed by base-q digit t of i.
 */
inline QFamily reed_solomon_family(const GaloisField& field, std::size_t n, std::size_t r,
                                   const ReedSolomonOptions& options = {}) {
  const std::uint32_t q = field.order();
  if (q < n) throw std::invalid_argument("Reed-Solomon family needs q >= n (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
  if (q > QVector::kMaxAlphabet) throw std::invalid_argument("q-ary vectors support q <= 256");
  const std::size_t d = reed_solomon_degree_bound(n, r);

  std::vector<FieldElement> points;
  for (std::uint32_t j = 0; j < n; ++j) points.push_back(field.element(j));

  auto evaluate = [&](const std::vector<FieldElement>& coeffs) {
    std::vector<std::uint8_t> symbols(n);
    for (std::size_t j = 0; j < n; ++j) symbols[j] = static_cast<std::uint8_t>(field.eval_poly(coeffs, points[j]).code);
    return QVector(q, std::move(symbols));
  };

  // q^d, saturating just above the cap.
  std::uint64_t total = 1;
  bool over_cap = false;
  for (std::size_t t = 0; t < d && !over_cap; ++t) {
    total *= q;
    over_cap = total > options.cap;
  }

  QFamily family(n, q);
  std::vector<FieldElement> coeffs(d);
  if (!over_cap) {
    for (std::uint64_t i = 0; i < total; ++i) {
      std::uint64_t x = i;
      for (std::size_t t = 0; t < d; ++t, x /= q) coeffs[t] = field.element(static_cast<std::uint32_t>(x % q));
      if (!family.insert(evaluate(coeffs))) throw std::logic_error("Reed-Solomon evaluations collided");
    }
    return family;
  }
  if (!options.allow_sampling)
    throw CapExceeded("Reed-Solomon family has q^d > cap=" + std::to_string(options.cap) + " members; enable sampling");

  CounterRng rng(options.seed);
  while (family.size() < options.cap) {
    for (auto& c : coeffs) c = field.element(static_cast<std::uint32_t>(rng.next_below(q)));
    family.insert(evaluate(coeffs));
  }
  return family;
}

/// Maximum number of coordinates on which two distinct members agree.
inline std::size_t max_agreement(const QFamily& family) {
  std::size_t best = 0;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      std::size_t agree = 0;
      for (std::size_t i = 0; i < family.n(); ++i) agree += family[a][i] == family[b][i];
      best = std::max(best, agree);
    }
  return best;
}

}  // namespace sunforge
