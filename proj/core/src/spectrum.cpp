#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include "sensornoise/calibration.hpp"

namespace sensornoise {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace

BandingSpectrum banding_spectrum(const RawFrame& bias) {
  const std::size_t h = bias.height();
  const std::size_t w = bias.width();
  const std::size_t half_w = w / 2 + 1;

  std::unique_ptr<double, FftwFree> in(fftw_alloc_real(h * w));
  std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(h * half_w));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_2d(static_cast<int>(h), static_cast<int>(w), in.get(), out.get(),
                                FFTW_ESTIMATE);
  }
  std::copy(bias.samples().begin(), bias.samples().end(), in.get());
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  BandingSpectrum s;
  s.width = w;
  s.height = h;
  s.magnitude.resize(h * w);
  const fftw_complex* x = out.get();
  for (std::size_t ky = 0; ky < h; ++ky) {
    const std::size_t dst_row = (ky + h / 2) % h;
    for (std::size_t kx = 0; kx < w; ++kx) {
      double re, im;
      if (kx < half_w) {
        re = x[ky * half_w + kx][0];
        im = x[ky * half_w + kx][1];
      } else {
        // Hermitian symmetry of a real input.
        const std::size_t my = (h - ky) % h;
        const std::size_t mx = w - kx;
        re = x[my * half_w + mx][0];
        im = -x[my * half_w + mx][1];
      }
      s.magnitude[dst_row * w + (kx + w / 2) % w] = static_cast<float>(std::hypot(re, im));
    }
  }

  // Ratios use the unshifted frequencies: vertical line = kx == 0.
  const std::size_t cy = h / 2;
  const std::size_t cx = w / 2;
  double line_v = 0.0, off_v = 0.0, line_h = 0.0, off_h = 0.0;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (r == cy && c == cx) continue;
      const double m = s.magnitude[r * w + c];
      (c == cx ? line_v : off_v) += m;
      (r == cy ? line_h : off_h) += m;
    }
  }
  const double n_line_v = static_cast<double>(h - 1);
  const double n_off_v = static_cast<double>(h * (w - 1));
  const double n_line_h = static_cast<double>(w - 1);
  const double n_off_h = static_cast<double>(w * (h - 1));
  const auto ratio = [](double line, double n_line, double off, double n_off) {
    if (off > 0.0) return (line / n_line) / (off / n_off);
    return line > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  };
  s.banding_ratio = ratio(line_v, n_line_v, off_v, n_off_v);
  s.column_ratio = ratio(line_h, n_line_h, off_h, n_off_h);
  return s;
}

}  // namespace sensornoise
