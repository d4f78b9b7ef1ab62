#include <gtest/gtest.h>

#include <cmath>

#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/metrics.hpp"

using namespace sensornoise;

namespace {

SensorInfo info() {
  SensorInfo i;
  i.black_level = 0;
  i.white_level = 1023;
  return i;
}

// Smooth gradients with edges, a stand-in for a natural scene.
RawFrame natural(std::size_t w, std::size_t h) {
  RawFrame f(w, h, info());
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const double x = static_cast<double>(c) / w, y = static_cast<double>(r) / h;
      double v = 300 + 250 * std::sin(6 * x + 2 * y) * std::cos(3 * y) + 200 * x;
      if ((x - 0.6) * (x - 0.6) + (y - 0.4) * (y - 0.4) < 0.04) v += 180;
      f.at(r, c) = std::clamp(v, 0.0, 1023.0);
    }
  }
  return f;
}

RawFrame random_frame(std::size_t w, std::size_t h, std::uint64_t s) {
  RawFrame f(w, h, info());
  RngStream rng(s, 0);
  for (double& v : f.samples()) v = 1023.0 * rng.next_uniform();
  return f;
}

}  // namespace

TEST(BrightnessAlign, Examples) {
  const RawFrame y = natural(16, 16);
  RawFrame x = y;
  for (double& v : x.samples()) v *= 2.0;
  EXPECT_NEAR(brightness_align(x, y), 0.5, 1e-15);
  EXPECT_NEAR(brightness_align(y, y), 1.0, 1e-15);
  EXPECT_THROW(brightness_align(RawFrame(16, 16, info(), 0.0), y), DegenerateDataError);
  EXPECT_THROW(brightness_align(y, RawFrame(16, 16, info(), 0.0)), DegenerateDataError);
  EXPECT_THROW(brightness_align(y, natural(16, 18)), ShapeError);
}

TEST(BrightnessAlign, MatchesGridSearch) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const RawFrame x = random_frame(64, 64, s), y = random_frame(64, 64, s + 1000);
    const double c = brightness_align(x, y);
    const double lo = 0.0, hi = 2.0, step = (hi - lo) / 9999.0;
    double best = lo, best_err = INFINITY;
    for (int i = 0; i < 10000; ++i) {
      const double t = lo + step * i;
      double err = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = t * x.samples()[k] - y.samples()[k];
        err += d * d;
      }
      if (err < best_err) {
        best_err = err;
        best = t;
      }
    }
    EXPECT_LE(std::abs(c - best), step) << s;
  }
}

TEST(Psnr, ConstantOffsetClosedForm) {
  const RawFrame x = natural(32, 32);
  RawFrame y = x;
  for (double& v : y.samples()) v += 1.0;
  EXPECT_NEAR(psnr(x, y, 1023.0), 20.0 * std::log10(1023.0), 1e-12);
  EXPECT_NEAR(psnr(x, y, 1023.0), 60.20, 0.005);
}

TEST(Psnr, IdenticalIsSentinel) {
  const RawFrame x = natural(32, 32);
  EXPECT_EQ(psnr(x, x, 1023.0), kPsnrIdentical);
  EXPECT_TRUE(std::isinf(kPsnrIdentical));
  EXPECT_THROW(psnr(x, x, 0.0), DomainError);
}

TEST(Ssim, IdenticalIsOne) {
  const RawFrame x = natural(64, 64);
  EXPECT_EQ(ssim(x, x, 1023.0), 1.0);
}

TEST(Ssim, ShuffledSceneScoresLow) {
  const RawFrame x = natural(256, 256);
  RawFrame y = x;
  // Fisher-Yates with the library stream; same histogram, no structure.
  RngStream rng(5, 5);
  auto s = y.samples();
  for (std::size_t i = s.size() - 1; i > 0; --i) std::swap(s[i], s[rng.next_below(i + 1)]);
  const double v = ssim(x, y, 1023.0);
  EXPECT_LT(v, 0.2);
  EXPECT_GE(v, -1.0);
}

TEST(Ssim, DegradesWithNoise) {
  const RawFrame x = natural(128, 128);
  double prev = 1.0;
  for (double sigma : {2.0, 10.0, 50.0}) {
    RawFrame y = x;
    const auto n = sample_gaussian(y.size(), sigma, RngStream(6, static_cast<std::uint64_t>(sigma)));
    for (std::size_t i = 0; i < y.size(); ++i) y.samples()[i] += n[i];
    const double v = ssim(x, y, 1023.0);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Ssim, TooSmallPlanes) {
  EXPECT_THROW(ssim(natural(20, 20), natural(20, 20), 1023.0), ShapeError);
}

TEST(Evaluate, AlignNeverLowersPsnr) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const RawFrame ref = natural(64, 64);
    RawFrame pred = ref;
    RngStream rng(s, 1);
    const double gain = 0.5 + rng.next_uniform();
    for (double& v : pred.samples()) v = v * gain + draw_gaussian(5.0, rng);
    const auto plain = evaluate(pred, ref, 1023.0, false);
    const auto aligned = evaluate(pred, ref, 1023.0, true);
    EXPECT_GE(aligned.psnr, plain.psnr);
    EXPECT_EQ(plain.align_scalar, 1.0);
    EXPECT_NEAR(aligned.align_scalar, brightness_align(pred, ref), 1e-15);
  }
}
