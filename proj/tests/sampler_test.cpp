#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "aztec/histogram.hpp"
#include "aztec/sampler.hpp"
#include "oracles.hpp"

namespace aztec {
namespace {

TEST(RandomSource, LowBitsFirst) {
  std::mt19937_64 ref(99);
  const std::uint64_t w0 = ref();
  const std::uint64_t w1 = ref();
  RandomSource rng(99);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(rng.next_bit(), ((w0 >> i) & 1) != 0) << i;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(rng.next_bit(), ((w1 >> i) & 1) != 0) << i;
  EXPECT_EQ(rng.consumed(), 67u);
}

TEST(Grow, FromEmptyReachesBothA1Tilings) {
  std::set<std::vector<Domino>> seen;
  for (std::uint64_t s = 0; s < 64; ++s) {
    RandomSource rng(s);
    int drawn = -1;
    const Tiling t = grow(Tiling(Region::aztec(0)), rng, &drawn);
    EXPECT_EQ(drawn, 1);
    EXPECT_EQ(t.region, Region::aztec(1));
    EXPECT_TRUE(is_valid(t));
    seen.insert(t.dominoes);
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Grow, DrawsOneBitPerAttractingNodeOfTheInnerField) {
  for (int n = 0; n <= 3; ++n) {
    const NodeContext ctx(n);
    for_each_tiling(ctx.inner(), [&](const Tiling& t) {
      const ArrowField inner = field_from_inner_tiling(t, ctx);
      RandomSource rng(static_cast<std::uint64_t>(n) * 1000 + t.horizontal_count());
      int drawn = -1;
      const Tiling g = grow(t, rng, &drawn);
      EXPECT_EQ(drawn, census(inner).attracting);
      EXPECT_EQ(rng.consumed(), static_cast<std::uint64_t>(drawn));
      EXPECT_TRUE(is_valid(g));
      EXPECT_EQ(field_from_outer_tiling(g, ctx), flip(inner));
    });
  }
}

TEST(Grow, RejectsRectangles) {
  RandomSource rng(1);
  EXPECT_THROW(grow(Tiling(Region::rectangle(2, 2), {{{0, 0}, Orientation::Horizontal}, {{0, 1}, Orientation::Horizontal}}), rng),
               InvalidInput);
}

TEST(Sample, OrderOneIsBalanced) {
  int horizontal = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) horizontal += sample_uniform({1, s}).horizontal_count() == 2;
  // Binomial(10000, 1/2): three standard deviations is 150.
  EXPECT_LE(std::abs(horizontal - 5000), 150);
}

TEST(Sample, OrderTwoChiSquare) {
  std::map<std::vector<Domino>, std::uint64_t> counts;
  for (const Tiling& t : enumerate_tilings(Region::aztec(2))) counts[t.dominoes] = 0;
  ASSERT_EQ(counts.size(), 8u);
  const std::uint64_t samples = 16000;
  for (std::uint64_t i = 0; i < samples; ++i) ++counts.at(sample_uniform({2, kDefaultSeed + i}).dominoes);
  const double expected = static_cast<double>(samples) / 8.0;
  double chi2 = 0;
  for (const auto& [_, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, oracle::chi_square_upper_quantile(7, 0.001)) << chi2;
}

TEST(SampleStatistics, HistogramFollowsBinomialWeights) {
  const std::uint64_t count = 80000;
  const SampleSummary s = sample_statistics(2, count, 11);
  EXPECT_EQ(s.order, 2);
  EXPECT_EQ(s.count, count);
  // Horizontal-pair count at order 2 is Binomial(3, 1/2).
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= 3; ++k) {
    const double p = binomial(3, k).convert_to<double>() / 8.0;
    const double mean = p * count;
    const double sd = std::sqrt(count * p * (1 - p));
    const double got = static_cast<double>(s.hist.count(static_cast<int>(k)) ? s.hist.at(static_cast<int>(k)) : 0);
    EXPECT_LE(std::abs(got - mean), 3 * sd) << k;
    total += static_cast<std::uint64_t>(got);
  }
  EXPECT_EQ(total, count);
  ASSERT_EQ(s.h_occupancy.size(), 4u);
  // Cells outside the diamond are never occupied.
  EXPECT_EQ(s.h_occupancy[0][0], 0u);
  EXPECT_EQ(s.h_occupancy[3][3], 0u);
}

TEST(SampleStatistics, Rejections) {
  EXPECT_THROW(sample_statistics(2, 0, 1), std::invalid_argument);
  EXPECT_THROW(sample_uniform({-1, 1}), std::invalid_argument);
}

TEST(Sample, OrderZero) {
  const SampleSummary s = sample_statistics(0, 5, 3);
  EXPECT_EQ(s.hist, (std::map<int, std::uint64_t>{{0, 5}}));
  EXPECT_TRUE(sample_uniform({0, 1}).dominoes.empty());
}

TEST(Sample, LargeOrderStaysValid) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Tiling t = sample_uniform({32, i});
    ASSERT_TRUE(is_valid(t)) << i;
    EXPECT_EQ(t.dominoes.size(), static_cast<std::size_t>(32 * 33));
  }
}

TEST(Sample, DeterministicPerSeed) {
  EXPECT_EQ(sample_uniform({8, 42}), sample_uniform({8, 42}));
  EXPECT_NE(sample_uniform({8, 42}), sample_uniform({8, 43}));
}

TEST(Sample, BitBudget) {
  for (int order : {1, 5, 12}) {
    SampleTrace trace;
    const Tiling t = sample_uniform({order, 5}, &trace);
    ASSERT_EQ(trace.free_choices.size(), static_cast<std::size_t>(order));
    EXPECT_EQ(trace.free_choices.front(), 1);
    const auto sum = std::accumulate(trace.free_choices.begin(), trace.free_choices.end(), std::uint64_t{0});
    EXPECT_EQ(trace.bits_consumed, sum);
    // Replaying the steps by hand draws one bit per attracting inner node.
    RandomSource rng(5);
    Tiling s(Region::aztec(0));
    for (int k = 0; k < order; ++k) {
      const NodeContext ctx(k);
      const int a = census(field_from_inner_tiling(s, ctx)).attracting;
      int drawn = 0;
      s = grow(s, rng, &drawn);
      EXPECT_EQ(drawn, census(field_from_outer_tiling(s, ctx)).repelling);
      EXPECT_EQ(drawn, a);
    }
    EXPECT_EQ(s, t);
  }
}

}  // namespace
}  // namespace aztec
