#pragma once

#include <limits>
#include <span>

#include "sensornoise/bayer.hpp"
#include "sensornoise/raw_frame.hpp"

namespace sensornoise {

// Returned by psnr() for identical inputs.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

// Closed-form minimizer of ||c * x - y||^2: c = <x, y> / <x, x>.
// Throws ShapeError on a size mismatch and DegenerateDataError when x or y
// is identically zero.
double brightness_align(std::span<const double> x, std::span<const double> y);
double brightness_align(const RawFrame& x, const RawFrame& y);

// Metrics run on the four packed Bayer planes. PSNR uses the MSE averaged
// over the planes; SSIM averages the per-plane means of the SSIM map
// (11-tap Gaussian window, sigma 1.5, K1 = 0.01, K2 = 0.03, valid region).
double psnr(const RawFrame& x, const RawFrame& y, double peak);
double ssim(const RawFrame& x, const RawFrame& y, double peak);
double plane_ssim(const Plane& x, const Plane& y, double peak);

struct EvalResult {
  double psnr = 0.0;
  double ssim = 0.0;
  double align_scalar = 1.0;
};

// With `align`, pred is multiplied by brightness_align(pred, ref) first.
EvalResult evaluate(const RawFrame& pred, const RawFrame& ref, double peak, bool align);

}  // namespace sensornoise
