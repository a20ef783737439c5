#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "arcmotion/prng.hpp"

using namespace arcmotion;

TEST(PrngTest, SameSeedSameStream) {
  Prng a(42), b(42);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(PrngTest, DifferentSeedsDiverge) {
  Prng a(42), b(43);
  int same = 0;
  for (int i = 0; i < 1000; ++i)
    if (a.next_u64() == b.next_u64()) ++same;
  EXPECT_EQ(same, 0);
}

TEST(PrngTest, Uniform01InRange) {
  Prng rng(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    if (u < lo) lo = u;
    if (u > hi) hi = u;
  }
  /* the stream actually spreads out */
  EXPECT_LT(lo, 0.01);
  EXPECT_GT(hi, 0.99);
}

TEST(PrngTest, UniformMeanNearCenter) {
  Prng rng(11);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) sum += rng.uniform(2.0, 4.0);
  EXPECT_NEAR(sum / n, 3.0, 0.01);
}

TEST(ChunkPrngTest, ChunksAreIndependentOfTraversalOrder) {
  /* chunk streams derive from (seed, chunk) alone */
  std::vector<uint64_t> forward, backward;
  for (uint64_t c = 0; c < 8; ++c) forward.push_back(chunk_prng(9, c).next_u64());
  for (uint64_t c = 8; c-- > 0;) backward.push_back(chunk_prng(9, c).next_u64());
  for (size_t i = 0; i < 8; ++i) EXPECT_EQ(forward[i], backward[7 - i]);
}

TEST(ChunkPrngTest, DistinctChunksDistinctStreams) {
  Prng a = chunk_prng(9, 0);
  Prng b = chunk_prng(9, 1);
  int same = 0;
  for (int i = 0; i < 100; ++i)
    if (a.next_u64() == b.next_u64()) ++same;
  EXPECT_EQ(same, 0);
}

TEST(SampleInBoxTest, PointsStayInside) {
  Box<double> box(-2.0, -1.0, 3.0, 5.0);
  Prng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Point<double> p = sample_in_box(rng, box);
    ASSERT_TRUE(box.contains(p));
  }
}

TEST(Mix64Test, AvalanchesNearbyInputs) {
  EXPECT_NE(mix64(0), mix64(1));
  EXPECT_NE(mix64(1), mix64(2));
  /* a one-bit input change flips roughly half the output bits */
  const uint64_t d = mix64(1234567) ^ mix64(1234566);
  int bits = 0;
  for (int i = 0; i < 64; ++i) bits += (int)((d >> i) & 1u);
  EXPECT_GT(bits, 16);
  EXPECT_LT(bits, 48);
}
