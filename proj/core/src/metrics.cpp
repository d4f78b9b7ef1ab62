#include "sensornoise/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

constexpr std::size_t kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kK1 = 0.01;
constexpr double kK2 = 0.03;

void require_same_shape(const RawFrame& x, const RawFrame& y) {
  if (!x.same_geometry(y)) throw ShapeError("metric inputs differ in shape");
}

void require_peak(double peak) {
  if (!(peak > 0.0) || !std::isfinite(peak)) throw DomainError("peak must be finite and > 0");
}

const std::array<double, kWindow>& gaussian_window() {
  static const auto w = [] {
    std::array<double, kWindow> g{};
    double sum = 0.0;
    for (std::size_t i = 0; i < kWindow; ++i) {
      const double d = static_cast<double>(i) - static_cast<double>(kWindow / 2);
      g[i] = std::exp(-d * d / (2.0 * kWindowSigma * kWindowSigma));
      sum += g[i];
    }
    for (double& v : g) v /= sum;
    return g;
  }();
  return w;
}

// Separable "valid" filtering: output is (h - 10) x (w - 10).
std::vector<double> filter_valid(const std::vector<double>& img, std::size_t w, std::size_t h) {
  const auto& g = gaussian_window();
  const std::size_t ow = w - kWindow + 1;
  const std::size_t oh = h - kWindow + 1;
  std::vector<double> tmp(h * ow);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kWindow; ++k) acc += g[k] * img[r * w + c + k];
      tmp[r * ow + c] = acc;
    }
  }
  std::vector<double> out(oh * ow);
  for (std::size_t r = 0; r < oh; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kWindow; ++k) acc += g[k] * tmp[(r + k) * ow + c];
      out[r * ow + c] = acc;
    }
  }
  return out;
}

}  // namespace

double brightness_align(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ShapeError("brightness_align: inputs differ in size");
  double xy = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  if (!(xx > 0.0)) throw DegenerateDataError("brightness_align: reconstruction is all zero");
  if (!(yy > 0.0)) throw DegenerateDataError("brightness_align: reference is all zero");
  return xy / xx;
}

double brightness_align(const RawFrame& x, const RawFrame& y) {
  require_same_shape(x, y);
  return brightness_align(x.samples(), y.samples());
}

double psnr(const RawFrame& x, const RawFrame& y, double peak) {
  require_same_shape(x, y);
  require_peak(peak);
  const BayerPlanes px = pack_bayer(x);
  const BayerPlanes py = pack_bayer(y);
  double mse = 0.0;
  for (std::size_t p = 0; p < 4; ++p) {
    const auto& a = px.planes[p].data;
    const auto& b = py.planes[p].data;
    double se = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) se += (a[i] - b[i]) * (a[i] - b[i]);
    mse += se / static_cast<double>(a.size());
  }
  mse /= 4.0;
  if (mse == 0.0) return kPsnrIdentical;
  return 10.0 * std::log10(peak * peak / mse);
}

double plane_ssim(const Plane& x, const Plane& y, double peak) {
  require_peak(peak);
  if (x.width != y.width || x.height != y.height) throw ShapeError("ssim planes differ in shape");
  if (x.width < kWindow || x.height < kWindow) {
    throw ShapeError("ssim needs planes of at least 11x11, got " + std::to_string(x.width) +
                     "x" + std::to_string(x.height));
  }
  const std::size_t n = x.data.size();
  std::vector<double> xx(n), yy(n), xy(n);
  for (std::size_t i = 0; i < n; ++i) {
    xx[i] = x.data[i] * x.data[i];
    yy[i] = y.data[i] * y.data[i];
    xy[i] = x.data[i] * y.data[i];
  }
  const auto mu_x = filter_valid(x.data, x.width, x.height);
  const auto mu_y = filter_valid(y.data, x.width, x.height);
  const auto e_xx = filter_valid(xx, x.width, x.height);
  const auto e_yy = filter_valid(yy, x.width, x.height);
  const auto e_xy = filter_valid(xy, x.width, x.height);

  const double c1 = (kK1 * peak) * (kK1 * peak);
  const double c2 = (kK2 * peak) * (kK2 * peak);
  double sum = 0.0;
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double mx = mu_x[i], my = mu_y[i];
    const double vx = e_xx[i] - mx * mx;
    const double vy = e_yy[i] - my * my;
    const double cov = e_xy[i] - mx * my;
    sum += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
           ((mx * mx + my * my + c1) * (vx + vy + c2));
  }
  return sum / static_cast<double>(mu_x.size());
}

double ssim(const RawFrame& x, const RawFrame& y, double peak) {
  require_same_shape(x, y);
  if (x.width() / 2 < kWindow || x.height() / 2 < kWindow) {
    throw ShapeError("ssim needs planes of at least 11x11, got " + std::to_string(x.width() / 2) +
                     "x" + std::to_string(x.height() / 2));
  }
  if (std::equal(x.samples().begin(), x.samples().end(), y.samples().begin())) {
    return 1.0;
  }
  const BayerPlanes px = pack_bayer(x);
  const BayerPlanes py = pack_bayer(y);
  double total = 0.0;
  for (std::size_t p = 0; p < 4; ++p) total += plane_ssim(px.planes[p], py.planes[p], peak);
  return total / 4.0;
}

EvalResult evaluate(const RawFrame& pred, const RawFrame& ref, double peak, bool align) {
  EvalResult result;
  if (align) {
    result.align_scalar = brightness_align(pred, ref);
    RawFrame scaled = pred;
    for (double& v : scaled.samples()) v *= result.align_scalar;
    result.psnr = psnr(scaled, ref, peak);
    result.ssim = ssim(scaled, ref, peak);
  } else {
    result.psnr = psnr(pred, ref, peak);
    result.ssim = ssim(pred, ref, peak);
  }
  return result;
}

}  // namespace sensornoise
