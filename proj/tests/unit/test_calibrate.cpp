#include <gtest/gtest.h>

#include <cmath>

#include "frames.hpp"
#include "sensornoise/errors.hpp"

using namespace sensornoise;

namespace {

CalibrationReport run(const NoiseParams& p, std::uint64_t seed) {
  const FrameSet flats = testframes::flat_set(1024, 1024, {500, 1000, 2000, 4000}, 2, p, seed);
  const FrameSet biases = testframes::bias_set(2048, 1024, 2, p, seed + 1);
  return calibrate_iso(flats, biases, {}, RngStream(seed, 99));
}

}  // namespace

TEST(CalibrateIso, EndToEndRoundTrip) {
  const NoiseParams p{.k = 2.0, .lambda = -0.1, .sigma_tl = 4.0, .sigma_r = 1.5, .q = 1.0};
  const CalibrationReport r = run(p, 41);
  EXPECT_NEAR(r.k_hat / p.k, 1.0, 0.02);
  EXPECT_NEAR(r.lambda_hat, p.lambda, 0.05);
  EXPECT_NEAR(r.sigma_tl_hat / p.sigma_tl, 1.0, 0.05);
  EXPECT_NEAR(r.sigma_r_hat / p.sigma_r, 1.0, 0.10);
  EXPECT_GT(r.r2_tl, r.r2_gauss);
  EXPECT_GT(r.banding_ratio, 1.5);

  EXPECT_GE(r.r2_gauss, 0.0);
  EXPECT_LE(r.r2_tl, 1.0);
  EXPECT_GE(r.shapiro_p, 0.0);
  EXPECT_LE(r.shapiro_p, 1.0);
  EXPECT_EQ(r.row_noise_gaussian, r.shapiro_p > 0.05);
  EXPECT_EQ(r.residual_gaussian, r.residual_shapiro_p > 0.05);
  EXPECT_EQ(r.ppcc_curve.size(), 201u);
  for (const auto& pt : r.ppcc_curve) {
    EXPECT_GE(pt.r, -1.0);
    EXPECT_LE(pt.r, 1.0);
  }
  EXPECT_EQ(r.spectrum_vertical_line.size(), 1024u);
  EXPECT_EQ(r.spectrum_horizontal_line.size(), 2048u);
  EXPECT_EQ(r.transfer_points.size(), 4u);
  EXPECT_EQ(r.iso, 100);
}

TEST(CalibrateIso, GaussianLikeShapeGivesEqualFits) {
  const NoiseParams p{.k = 1.0, .lambda = 0.14, .sigma_tl = 6.0, .sigma_r = 0.5, .q = 1.0};
  const CalibrationReport r = run(p, 42);
  EXPECT_NEAR(r.r2_tl, r.r2_gauss, 0.01);
  EXPECT_GE(r.r2_tl, r.r2_gauss - 0.005);
}

TEST(CalibrateIso, NoiselessBiasesAreDegenerate) {
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = 2.0, .q = 1.0};
  const FrameSet flats = testframes::flat_set(128, 128, {100, 400}, 2, p, 43);
  const FrameSet biases = FrameSet::bias({RawFrame(128, 128, testframes::wide_info(), 0.0)});
  EXPECT_THROW(calibrate_iso(flats, biases), DegenerateDataError);
}

TEST(CalibrateIso, Deterministic) {
  const NoiseParams p{.k = 1.3, .lambda = 0.05, .sigma_tl = 3.0, .sigma_r = 1.0, .q = 1.0};
  const FrameSet flats = testframes::flat_set(256, 256, {300, 900}, 2, p, 44);
  const FrameSet biases = testframes::bias_set(512, 256, 2, p, 45);
  const auto a = calibrate_iso(flats, biases, {}, RngStream(1, 1));
  const auto b = calibrate_iso(flats, biases, {}, RngStream(1, 1));
  EXPECT_EQ(a.lambda_hat, b.lambda_hat);
  EXPECT_EQ(a.sigma_tl_hat, b.sigma_tl_hat);
  EXPECT_EQ(a.shapiro_p, b.shapiro_p);
  EXPECT_EQ(a.residual_shapiro_p, b.residual_shapiro_p);
}

TEST(CalibrateIso, RejectsMismatchedIso) {
  const NoiseParams p{.k = 1.0, .lambda = 0.0, .sigma_tl = 2.0, .q = 1.0};
  const FrameSet flats = testframes::flat_set(64, 64, {100, 400}, 2, p, 46);
  RawFrame b(64, 64, testframes::wide_info(400), 0.0);
  EXPECT_THROW(calibrate_iso(flats, FrameSet::bias({b})), ConfigError);
}
