#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "sensornoise/rng.hpp"

using sensornoise::RngStream;

// Known-answer vectors for Philox4x32-10 published with Random123.
TEST(Philox, KnownAnswerZero) {
  const auto out = RngStream::philox({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = RngStream::philox({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                     {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  const auto out = RngStream::philox({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                     {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RngStream, ReplaysForSameSeedAndStream) {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(RngStream, DrawIsFunctionOfIndex) {
  RngStream a(9, 3);
  std::vector<std::uint64_t> seq;
  for (int i = 0; i < 64; ++i) seq.push_back(a.next_u64());
  // Read backwards through seek: order of consumption must not matter.
  RngStream b(9, 3);
  for (int i = 63; i >= 0; --i) {
    b.seek(static_cast<std::uint64_t>(i));
    ASSERT_EQ(b.next_u64(), seq[static_cast<std::size_t>(i)]) << i;
  }
}

TEST(RngStream, CopyForksIdenticalSequence) {
  RngStream a(1, 1);
  a.next_u64();
  RngStream b = a;
  EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a.position(), b.position());
}

TEST(RngStream, DistinctStreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 200; ++s) {
    firsts.insert(RngStream(5, s).next_u64());
    firsts.insert(RngStream(s + 1000, 0).next_u64());
    firsts.insert(RngStream(5, 0).substream(s).next_u64());
  }
  EXPECT_EQ(firsts.size(), 600u);
}

TEST(RngStream, SubstreamIsDeterministicAndDistinctFromParent) {
  const RngStream root(11, 2);
  EXPECT_EQ(root.substream(4).next_u64(), root.substream(4).next_u64());
  EXPECT_NE(root.substream(4).stream_id(), root.stream_id());
  EXPECT_NE(root.substream(4).stream_id(), root.substream(5).stream_id());
  EXPECT_NE(root.substream(0).substream(1).stream_id(), root.substream(1).substream(0).stream_id());
}

TEST(RngStream, UniformIsInOpenIntervalWithRightMoments) {
  RngStream r(3, 0);
  std::vector<double> v(200000);
  for (auto& x : v) {
    x = r.next_uniform();
    ASSERT_GT(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
  EXPECT_NEAR(oracle::mean(v), 0.5, 0.003);
  EXPECT_NEAR(oracle::variance(v), 1.0 / 12.0, 0.001);
  EXPECT_GT(oracle::ks_pvalue(oracle::ks_statistic(v, [](double x) { return x; }), v.size()), 0.01);
}

TEST(RngStream, NextBelowIsUniform) {
  RngStream r(4, 0);
  const std::uint64_t bound = 7;
  const int n = 70000;
  std::vector<int> counts(bound, 0);
  for (int i = 0; i < n; ++i) {
    const auto k = r.next_below(bound);
    ASSERT_LT(k, bound);
    ++counts[k];
  }
  double chi2 = 0;
  const double e = static_cast<double>(n) / bound;
  for (int c : counts) chi2 += (c - e) * (c - e) / e;
  EXPECT_LT(chi2, oracle::chi2_critical_01(bound - 1));
  EXPECT_EQ(RngStream(4, 1).next_below(1), 0u);
}
