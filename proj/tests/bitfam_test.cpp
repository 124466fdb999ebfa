#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sunforge/bitfam.hpp"
#include "sunforge/rng.hpp"

using namespace sunforge;

TEST(BitVector, StringRoundTrip) {
  const auto v = BitVector::from_string("0110100");
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(v.to_string(), "0110100");
  EXPECT_FALSE(v.test(0));
  EXPECT_TRUE(v.test(1));
  EXPECT_EQ(v.count(), 3u);
}

TEST(BitVector, LengthLimits) {
  EXPECT_THROW(BitVector(0), std::invalid_argument);
  EXPECT_THROW(BitVector(BitVector::kMaxLength + 1), std::invalid_argument);
  EXPECT_NO_THROW(BitVector(BitVector::kMaxLength));
  EXPECT_THROW(BitVector::from_string("01a"), std::invalid_argument);
}

TEST(BitVector, IntegerOrderIsLexicographic) {
  for (std::uint64_t a = 0; a < 32; ++a)
    for (std::uint64_t b = 0; b < 32; ++b)
      EXPECT_EQ(lexicographic_less(BitVector::from_integer(5, a), BitVector::from_integer(5, b)), a < b);
  EXPECT_EQ(BitVector::from_integer(4, 0b1000).to_string(), "1000");
}

TEST(BitVector, WordBoundaryOperations) {
  std::mt19937_64 gen(11);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u, 200u}) {
    const auto a = oracle::random_vector(n, gen);
    const auto b = oracle::random_vector(n, gen);
    const auto x = a ^ b;
    std::size_t diff = 0;
    bool meet = false;
    bool sub = true;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(x.test(i), a.test(i) != b.test(i));
      diff += a.test(i) != b.test(i);
      meet = meet || (a.test(i) && b.test(i));
      sub = sub && (!a.test(i) || b.test(i));
    }
    EXPECT_EQ(hamming_distance(a, b), diff);
    EXPECT_EQ(a.intersects(b), meet);
    EXPECT_EQ(a.is_subset_of(b), sub);
    EXPECT_EQ((~a).count(), n - a.count());
    EXPECT_EQ(~~a, a);
  }
}

TEST(BitVector, MismatchedLengthsThrow) {
  EXPECT_THROW(BitVector(3) ^ BitVector(4), std::invalid_argument);
  EXPECT_THROW(BitVector(3).test(3), std::out_of_range);
}

TEST(QVector, SymbolsAndDifferenceMask) {
  const QVector a(5, {0, 3, 4, 1});
  const QVector b(5, {0, 2, 4, 0});
  EXPECT_EQ(a.to_string(), "0,3,4,1");
  EXPECT_EQ(difference_mask(a, b).to_string(), "0101");
  EXPECT_THROW(QVector(5, {0, 5}), std::invalid_argument);
  EXPECT_THROW(QVector(1, {0}), std::invalid_argument);
}

TEST(Family, DeduplicatesAndIndexes) {
  Family f(3);
  EXPECT_TRUE(f.insert(BitVector::from_string("000")));
  EXPECT_TRUE(f.insert(BitVector::from_string("101")));
  EXPECT_FALSE(f.insert(BitVector::from_string("000")));
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.index_of(BitVector::from_string("101")), 1u);
  EXPECT_THROW(f.insert(BitVector::from_string("0000")), std::invalid_argument);
  f.erase(0);
  EXPECT_EQ(f.index_of(BitVector::from_string("101")), 0u);
  EXPECT_FALSE(f.contains(BitVector::from_string("000")));
  EXPECT_THROW(Family(2, {BitVector::from_string("01"), BitVector::from_string("01")}), std::invalid_argument);
}

TEST(Family, ComplementPreservesOrder) {
  const Family f(3, {BitVector::from_string("001"), BitVector::from_string("110"), BitVector::from_string("011")});
  const auto c = complement_family(f);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].to_string(), "110");
  EXPECT_EQ(c[1].to_string(), "001");
  EXPECT_EQ(c[2].to_string(), "100");
}

TEST(Family, ParamsValidate) {
  EXPECT_NO_THROW((Params{5, 3, 2, 2, 1}.validate()));
  EXPECT_THROW((Params{5, 2, 2, 2, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((Params{5, 3, 2, 6, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((Params{5, 3, 2, 2, 2}.validate()), std::invalid_argument);
}

TEST(ColumnProfile, MatchesNaiveCountsOnRandomTuples) {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  std::size_t checked = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = len(gen);
    const std::size_t size = n < 6 ? (std::size_t{1} << n) : 40;
    const auto f = oracle::random_family(n, size, gen);
    for (int t = 0; t < 60; ++t) {
      const std::size_t k = 1 + gen() % size;
      const auto tuple = oracle::random_tuple(f.size(), k, gen);
      const auto profile = column_profile(f, tuple);
      ASSERT_EQ(profile.tuple_size, k);
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(profile.counts[i], oracle::ones_in_column(f, tuple, i));
      ++checked;
    }
  }
  EXPECT_GE(checked, 10000u);
}

TEST(ColumnProfile, RejectsRepeatedIndices) {
  const Family f(2, {BitVector::from_string("01"), BitVector::from_string("10")});
  const std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(column_profile(f, bad), std::invalid_argument);
  const std::vector<std::size_t> out{0, 2};
  EXPECT_THROW(column_profile(f, out), std::out_of_range);
}

TEST(ColumnProfile, SymbolCounts) {
  const QFamily f(3, {QVector(3, {0, 1, 2}), QVector(3, {0, 2, 2}), QVector(3, {1, 1, 2})}, 3);
  const std::vector<std::size_t> all{0, 1, 2};
  const auto counts = column_symbol_counts(f, all);
  EXPECT_EQ(counts[0], (std::vector<std::uint32_t>{2, 1, 0}));
  EXPECT_EQ(counts[1], (std::vector<std::uint32_t>{0, 2, 1}));
  EXPECT_EQ(counts[2], (std::vector<std::uint32_t>{0, 0, 3}));
}

TEST(CounterRng, MatchesSplitMix64Reference) {
  // First outputs of SplitMix64 started from state 0.
  const CounterRng rng(0);
  EXPECT_EQ(rng.at(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.at(1), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.at(2), 0x06C45D188009454FULL);
}

TEST(CounterRng, StreamIsAddressable) {
  CounterRng a(99);
  const CounterRng b(99);
  for (std::uint64_t c = 0; c < 100; ++c) EXPECT_EQ(a.next(), b.at(c));
  CounterRng d(5);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(d.next_below(7), 7u);
    const double u = d.next_uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
