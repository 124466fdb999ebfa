#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "sunforge/construct/field.hpp"

using namespace sunforge;

namespace {

// GF(2)[x] polynomials as bit masks (bit i = coefficient of x^i).
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, int deg) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> deg) & 1) a ^= f;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = 63 - __builtin_clzll(f);
  while (a && 63 - __builtin_clzll(a) >= df) a ^= f << ((63 - __builtin_clzll(a)) - df);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Rabin: f of degree m is irreducible iff x^(2^m) = x mod f and
// gcd(x^(2^(m/d)) - x, f) = 1 for every prime d dividing m.
bool rabin_irreducible(std::uint64_t f, int m) {
  auto frobenius = [&](int times) {
    std::uint64_t x = 2;
    for (int i = 0; i < times; ++i) x = poly_mulmod(x, x, f, m);
    return x;
  };
  if (frobenius(m) != 2) return false;
  for (int d = 2; d <= m; ++d) {
    bool prime = true;
    for (int e = 2; e * e <= d; ++e) prime = prime && d % e != 0;
    if (!prime || m % d != 0) continue;
    if (poly_gcd(f, frobenius(m / d) ^ 2) != 1) return false;
  }
  return true;
}

void check_axioms_exhaustively(const GaloisField& F) {
  const std::uint32_t q = F.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    const FieldElement x{a};
    EXPECT_EQ(F.add(x, F.zero()), x);
    EXPECT_EQ(F.mul(x, F.one()), x);
    EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
    if (a != 0) {
      EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const FieldElement y{b};
      EXPECT_EQ(F.add(x, y), F.add(y, x));
      EXPECT_EQ(F.mul(x, y), F.mul(y, x));
      if (a != 0 && b != 0) {
        EXPECT_NE(F.mul(x, y), F.zero());
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        const FieldElement z{c};
        ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
        ASSERT_EQ(F.add(F.add(x, y), z), F.add(x, F.add(y, z)));
        ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
      }
    }
  }
}

void check_axioms_sampled(const GaloisField& F, int samples) {
  std::mt19937_64 gen(F.order());
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
  for (int s = 0; s < samples; ++s) {
    const FieldElement x{pick(gen)}, y{pick(gen)}, z{pick(gen)};
    ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
    ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
    ASSERT_EQ(F.mul(x, y), F.mul(y, x));
    if (x.code != 0) {
      ASSERT_EQ(F.mul(x, F.inv(x)), F.one());
      ASSERT_EQ(F.pow(x, F.order() - 1), F.one());
    }
  }
}

}  // namespace

TEST(Field, SmallFieldsSatisfyAxioms) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    SCOPED_TRACE(q);
    check_axioms_exhaustively(GaloisField::of_order(q));
  }
}

TEST(Field, LargerFieldsSatisfyAxioms) {
  for (std::uint64_t q : {251u, 256u, 121u, 169u, 1024u, 65536u}) {
    SCOPED_TRACE(q);
    check_axioms_sampled(GaloisField::of_order(q), 3000);
  }
}

TEST(Field, BinaryModulusTableIsIrreducible) {
  for (int m = 2; m <= 16; ++m) {
    const auto spec = FieldSpec::for_order(std::uint64_t{1} << m);
    std::uint64_t f = 0;
    for (std::size_t i = 0; i < spec.modulus.size(); ++i)
      if (spec.modulus[i]) f |= std::uint64_t{1} << i;
    EXPECT_TRUE(rabin_irreducible(f, m)) << "m=" << m;
    EXPECT_TRUE(spec.irreducible());
  }
}

TEST(Field, QuadraticModulusTableHasNoRoots) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto spec = FieldSpec::for_order(std::uint64_t{p} * p);
    ASSERT_EQ(spec.modulus.size(), 3u);
    for (std::uint64_t x = 0; x < p; ++x)
      EXPECT_NE((x * x + spec.modulus[1] * x + spec.modulus[0]) % p, 0u) << "p=" << p << " root " << x;
  }
}

TEST(Field, RejectsUnsupportedOrders) {
  EXPECT_THROW(GaloisField::of_order(6), std::invalid_argument);
  EXPECT_THROW(GaloisField::of_order(1), std::invalid_argument);
  EXPECT_THROW(GaloisField::of_order(27), std::invalid_argument);
  EXPECT_THROW(GaloisField::of_order(17 * 17), std::invalid_argument);
  EXPECT_THROW(GaloisField(FieldSpec{2, 2, {1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(GaloisField::of_order(5).inv(FieldElement{0}), std::domain_error);
}

TEST(Field, CanonicalOrderStartsWithConstants) {
  const auto F = GaloisField::of_order(9);
  for (std::uint32_t k = 0; k < 3; ++k) EXPECT_EQ(F.coefficients(F.element(k)), (std::vector<std::uint32_t>{k, 0}));
  EXPECT_EQ(F.coefficients(F.element(3)), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_THROW(F.element(9), std::out_of_range);
}

TEST(Field, HornerEvaluation) {
  const auto F = GaloisField::of_order(7);
  // 3 + 2x + x^2 at x = 4: 3 + 8 + 16 = 27 = 6 mod 7.
  const std::vector<FieldElement> coeffs{{3}, {2}, {1}};
  EXPECT_EQ(F.eval_poly(coeffs, FieldElement{4}).code, 6u);
}
