#pragma once

// Exact-arithmetic helpers shared by the bound formulas.

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace sunforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt power(std::size_t base, std::size_t exponent) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent)); }

inline BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// ceil(a / b) for b > 0.
constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// log2 of a positive integer, accurate to double precision at any size.
inline double log2_of(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2_of: argument must be positive");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 62) return std::log2(x.convert_to<double>());
  const std::size_t shift = msb - 60;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline double log2_of(const Rational& x) {
  return log2_of(boost::multiprecision::numerator(x)) - log2_of(boost::multiprecision::denominator(x));
}

inline double to_double(const Rational& x) {
  if (x == 0) return 0.0;
  if (x < 0) return -to_double(Rational(-x));
  return std::exp2(log2_of(x));
}

}  // namespace sunforge
