#include <gtest/gtest.h>

#include <cmath>

#include "frames.hpp"
#include "oracles.hpp"
#include "sensornoise/errors.hpp"

using namespace sensornoise;

TEST(EstimateRowNoise, ConstantFrameIsZero) {
  const auto r = estimate_row_noise(FrameSet::bias({RawFrame(64, 64, testframes::wide_info(), 0.0)}));
  EXPECT_EQ(r.sigma_r, 0.0);
  EXPECT_EQ(r.row_means.size(), 64u);
}

TEST(EstimateRowNoise, RecoversSigmaR) {
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = 2.0, .sigma_r = 5.0, .q = 1.0};
  const auto r = estimate_row_noise(testframes::bias_set(2048, 2048, 1, p, 31));
  EXPECT_GE(r.sigma_r, 4.75);
  EXPECT_LE(r.sigma_r, 5.25);
}

// Without row noise the corrected estimate collapses toward zero; the raw RMS
// of row means alone would sit near sigma_pix / sqrt(W).
TEST(EstimateRowNoise, NoRowNoiseCollapsesCorrection) {
  const double sigma_tl = 2.0;
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = sigma_tl, .sigma_r = 0.0, .q = 1.0};
  const auto r = estimate_row_noise(testframes::bias_set(2048, 2048, 1, p, 32));
  const double raw = std::sqrt(r.pixel_variance / 2048.0);
  EXPECT_NEAR(r.rms_row_mean / raw, 1.0, 0.05);
  // Three standard deviations of the null fluctuation of sigma_r_hat^2.
  EXPECT_LT(r.sigma_r * r.sigma_r, 3.0 * raw * raw * std::sqrt(2.0 / 2048.0));
}

// The bound sigma_r_hat < 0.1 * sigma_tl / sqrt(W) at sigma_r = 0 is a coin
// flip, not a guarantee: with H rows, mean(row_mean^2) - s2/W is about
// N(0, (s2/W) sqrt(2/H)) with s2 the pixel variance, so the bound holds with
// probability Phi(0.01 sigma_tl^2 / s2 * sqrt(H/2)), about 0.54 for H = 2048.
// W cancels, so narrow frames reproduce the 2048 x 2048 case.
TEST(EstimateRowNoise, NoRowNoiseBoundHoldsAtPredictedRate) {
  const double sigma_tl = 2.0;
  const std::size_t w = 64, h = 2048;
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = sigma_tl, .sigma_r = 0.0, .q = 1.0};
  const double s2 = sigma_tl * sigma_tl * tukey_lambda_variance(0.0) + 1.0 / 12.0;
  const double predicted =
      oracle::normal_cdf(0.01 * sigma_tl * sigma_tl / s2 * std::sqrt(static_cast<double>(h) / 2.0));
  const int trials = 400;
  int held = 0, zero = 0;
  for (int t = 0; t < trials; ++t) {
    const auto r = estimate_row_noise(testframes::bias_set(w, h, 1, p, 1000 + t));
    if (r.sigma_r < 0.1 * sigma_tl / std::sqrt(static_cast<double>(w))) ++held;
    if (r.sigma_r == 0.0) ++zero;
  }
  EXPECT_NEAR(static_cast<double>(held) / trials, predicted, 0.08);
  EXPECT_NEAR(static_cast<double>(zero) / trials, 0.5, 0.08);
}

TEST(EstimateRowNoise, CorrectionUsesPixelVariance) {
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = 3.0, .sigma_r = 1.0, .q = 0.0};
  const auto r = estimate_row_noise(testframes::bias_set(256, 128, 2, p, 33));
  EXPECT_EQ(r.width, 256u);
  EXPECT_EQ(r.row_means.size(), 256u);
  EXPECT_NEAR(r.sigma_r * r.sigma_r,
              std::max(0.0, r.rms_row_mean * r.rms_row_mean - r.pixel_variance / 256.0), 1e-12);
  EXPECT_NEAR(r.pixel_variance / (9.0 * tukey_lambda_variance(0.0)), 1.0, 0.05);
}

TEST(EstimateRowNoise, NeedsSixteenRows) {
  EXPECT_THROW(estimate_row_noise(FrameSet::bias({RawFrame(8, 14, testframes::wide_info(), 1.0)})),
               InsufficientDataError);
  EXPECT_NO_THROW(estimate_row_noise(FrameSet::bias(
      {RawFrame(8, 8, testframes::wide_info(), 1.0), RawFrame(8, 8, testframes::wide_info(), 1.0)})));
  EXPECT_THROW(FrameSet::bias({}).validate(), InsufficientDataError);
}

TEST(SubtractRowMeans, ZeroesEveryRowMean) {
  const NoiseParams p{.k = 1.0, .lambda = -0.3, .sigma_tl = 4.0, .sigma_r = 2.0, .q = 1.0};
  RawFrame f = testframes::bias(130, 64, p, RngStream(34, 0));
  for (double& v : f.samples()) v += 1000.0;
  subtract_row_means(f);
  for (std::size_t r = 0; r < f.height(); ++r) {
    const auto row = f.row(r);
    EXPECT_NEAR(oracle::mean(row), 0.0, 1e-10);
  }
}

TEST(FrameSet, RejectsMixedGeometryOrMetadata) {
  auto info2 = testframes::wide_info(200);
  EXPECT_THROW(FrameSet::bias({RawFrame(8, 8, testframes::wide_info()), RawFrame(8, 10, testframes::wide_info())})
                   .validate(),
               ShapeError);
  EXPECT_THROW(FrameSet::bias({RawFrame(8, 8, testframes::wide_info()), RawFrame(8, 8, info2)}).validate(),
               ConfigError);
}
