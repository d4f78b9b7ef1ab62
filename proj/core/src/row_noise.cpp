#include <cmath>
#include <string>

#include "sensornoise/calibration.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

double row_mean(std::span<const double> row) noexcept {
  double sum = 0.0;
  for (double v : row) sum += v;
  return sum / static_cast<double>(row.size());
}

}  // namespace

void subtract_row_means(RawFrame& frame) noexcept {
  for (std::size_t r = 0; r < frame.height(); ++r) {
    auto row = frame.row(r);
    const double m = row_mean(row);
    for (double& v : row) v -= m;
  }
}

RowNoiseEstimate estimate_row_noise(const FrameSet& biases) {
  if (biases.frames.empty()) throw InsufficientDataError("row noise needs >= 1 bias frame");
  std::size_t rows = 0;
  for (const auto& f : biases.frames) rows += f.height();
  if (rows < 16) {
    throw InsufficientDataError("row noise needs >= 16 rows in total, got " +
                                std::to_string(rows));
  }
  biases.validate();

  RowNoiseEstimate est;
  est.width = biases.frames.front().width();
  est.row_means.reserve(rows);
  double sum_sq_means = 0.0;
  double sum_sq_resid = 0.0;
  double resid_dof = 0.0;
  for (const auto& f : biases.frames) {
    for (std::size_t r = 0; r < f.height(); ++r) {
      const auto row = f.row(r);
      const double m = row_mean(row);
      est.row_means.push_back(m);
      sum_sq_means += m * m;
      for (double v : row) sum_sq_resid += (v - m) * (v - m);
      resid_dof += static_cast<double>(row.size() - 1);
    }
  }
  const double mean_sq = sum_sq_means / static_cast<double>(rows);
  est.rms_row_mean = std::sqrt(mean_sq);
  est.pixel_variance = sum_sq_resid / resid_dof;
  est.sigma_r =
      std::sqrt(std::max(0.0, mean_sq - est.pixel_variance / static_cast<double>(est.width)));
  return est;
}

}  // namespace sensornoise
