#pragma once

/**
 * Finite fields GF(p^m).
 *
 * An element is stored as its code c = sum_i coef_i * p^i, where coef_i is
 * the coefficient of x^i in its polynomial representative modulo the field
 * modulus. Code order is the canonical element order: lexicographic on the
 * coefficient vector read from the top degree, so the p constants come first.
 *
 * Supported: every prime field, GF(2^m) for m <= 16 and GF(p^2) for p <= 13,
 * with moduli from a fixed table. Any modulus is checked for irreducibility
 * by trial division when the spec is built.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunforge {

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Remainder of `a` modulo monic `b` over GF(p); coefficients low degree first.
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace detail

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  /// Monic modulus of degree m, coefficients low degree first (size m + 1).
  std::vector<std::uint32_t> modulus{0, 1};

  std::uint64_t order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    return q;
  }

  /// Throws std::invalid_argument unless p is prime and the modulus is a
  /// monic irreducible polynomial of degree m.
  void validate() const {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("field degree must be >= 1");
    if (order() > (std::uint64_t{1} << 24)) throw std::invalid_argument("field order above 2^24 is not supported");
    if (modulus.size() != m + 1 || modulus.back() != 1)
      throw std::invalid_argument("field modulus must be monic of degree m");
    for (auto c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!irreducible()) throw std::invalid_argument("field modulus is reducible");
  }

  /// No monic factor of degree 1..m/2 divides the modulus.
  bool irreducible() const {
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> divisor(d + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < d; ++i, c /= p) divisor[i] = static_cast<std::uint32_t>(c % p);
        divisor[d] = 1;
        auto rem = detail::poly_mod(modulus, divisor, p);
        bool zero = true;
        for (auto x : rem) zero = zero && x == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  static FieldSpec prime(std::uint32_t p) {
    FieldSpec spec{p, 1, {0, 1}};
    spec.validate();
    return spec;
  }

  /// Table lookup for a prime-power order q.
  static FieldSpec for_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (m == 1) return prime(static_cast<std::uint32_t>(p));

    FieldSpec spec;
    spec.p = static_cast<std::uint32_t>(p);
    spec.m = m;
    if (p == 2 && m <= 16) {
      // Exponents of the non-leading terms of x^m + ... .
      static const std::vector<std::vector<std::uint32_t>> kBinary = {
          {}, {}, {1, 0}, {1, 0}, {1, 0}, {2, 0}, {1, 0}, {1, 0}, {4, 3, 1, 0}, {4, 0},
          {3, 0}, {2, 0}, {6, 4, 1, 0}, {4, 3, 1, 0}, {10, 6, 1, 0}, {1, 0}, {12, 3, 1, 0}};
      spec.modulus.assign(m + 1, 0);
      spec.modulus[m] = 1;
      for (auto e : kBinary[m]) spec.modulus[e] = 1;
    } else if (m == 2 && p <= 13) {
      // x^2 + c with -c a quadratic non-residue; x^2 + x + 1 for p = 2.
      const std::uint32_t c = (p == 5 || p == 13) ? 2 : 1;
      spec.modulus = {c, 0, 1};
    } else {
      throw std::invalid_argument("no modulus table entry for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
    }
    spec.validate();
    return spec;
  }
};

struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    q_ = static_cast<std::uint32_t>(spec_.order());
    if (q_ <= kTableLimit) {
      mul_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = slow_mul(a, b);
    }
  }

  static GaloisField of_order(std::uint64_t q) { return GaloisField(FieldSpec::for_order(q)); }

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t order() const noexcept { return q_; }

  /// The k-th element in canonical order.
  FieldElement element(std::uint32_t k) const {
    if (k >= q_) throw std::out_of_range("field element index out of range");
    return {k};
  }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }

  std::vector<std::uint32_t> coefficients(FieldElement e) const {
    std::vector<std::uint32_t> c(spec_.m);
    std::uint32_t x = e.code;
    for (auto& ci : c) {
      ci = x % spec_.p;
      x /= spec_.p;
    }
    return c;
  }

  FieldElement from_coefficients(std::span<const std::uint32_t> c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * spec_.p + c[i] % spec_.p;
    return {code};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (spec_.m == 1) return {(a.code + b.code) % spec_.p};
    auto ca = coefficients(a);
    auto cb = coefficients(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % spec_.p;
    return from_coefficients(ca);
  }

  FieldElement neg(FieldElement a) const {
    auto ca = coefficients(a);
    for (auto& c : ca) c = (spec_.p - c) % spec_.p;
    return from_coefficients(ca);
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (!mul_table_.empty()) return {mul_table_[a.code * q_ + b.code]};
    return {slow_mul(a.code, b.code)};
  }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = one();
    while (e) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// a^(q-2); throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
  }

  /// sum_i coeffs[i] * a^i, by Horner's rule.
  FieldElement eval_poly(std::span<const FieldElement> coeffs, FieldElement a) const {
    FieldElement acc = zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, a), coeffs[i]);
    return acc;
  }

 private:
  static constexpr std::uint32_t kTableLimit = 256;

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec_.p;
    if (spec_.m == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    auto ca = coefficients({a});
    auto cb = coefficients({b});
    std::vector<std::uint32_t> prod(2 * spec_.m - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
      for (std::size_t j = 0; j < cb.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    auto rem = detail::poly_mod(std::move(prod), spec_.modulus, p);
    rem.resize(spec_.m, 0);
    return from_coefficients(rem).code;
  }

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> mul_table_;
};

}  // namespace sunforge
