#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sensornoise/calibration.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/fit_line.hpp"

namespace sensornoise {

namespace {

struct Crop {
  std::size_t row0, row1, col0, col1;
  double count() const { return static_cast<double>((row1 - row0) * (col1 - col0)); }
};

Crop central_crop(const RawFrame& frame, double fraction) {
  const auto side = [fraction](std::size_t n) {
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(n * fraction)), 2, n);
  };
  const std::size_t h = side(frame.height());
  const std::size_t w = side(frame.width());
  const std::size_t r0 = (frame.height() - h) / 2;
  const std::size_t c0 = (frame.width() - w) / 2;
  return {r0, r0 + h, c0, c0 + w};
}

double crop_mean(const RawFrame& f, const Crop& crop) {
  double sum = 0.0;
  for (std::size_t r = crop.row0; r < crop.row1; ++r) {
    const auto row = f.row(r);
    for (std::size_t c = crop.col0; c < crop.col1; ++c) sum += row[c];
  }
  return sum / crop.count();
}

// Half the sample variance of a - b over the crop.
double pair_variance(const RawFrame& a, const RawFrame& b, const Crop& crop) {
  const double mean_diff = crop_mean(a, crop) - crop_mean(b, crop);
  double ss = 0.0;
  for (std::size_t r = crop.row0; r < crop.row1; ++r) {
    const auto ra = a.row(r);
    const auto rb = b.row(r);
    for (std::size_t c = crop.col0; c < crop.col1; ++c) {
      const double d = ra[c] - rb[c] - mean_diff;
      ss += d * d;
    }
  }
  return 0.5 * ss / (crop.count() - 1.0);
}

}  // namespace

GainEstimate estimate_gain(const FrameSet& flats, const GainOptions& options) {
  flats.validate();
  if (flats.kind != FrameKind::kFlatField) {
    throw ConfigError("estimate_gain expects flat-field frames");
  }
  if (!(options.center_fraction > 0.0 && options.center_fraction <= 1.0)) {
    throw ConfigError("center_fraction must lie in (0, 1]");
  }

  std::map<double, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < flats.frames.size(); ++i) {
    by_level[flats.illumination_level[i]].push_back(i);
  }

  const Crop crop = central_crop(flats.frames.front(), options.center_fraction);
  const double saturation = options.max_level_fraction * flats.frames.front().info().range();

  GainEstimate estimate;
  std::vector<double> means, variances;
  for (const auto& [level, indices] : by_level) {
    if (indices.size() < 2) continue;
    PhotonTransferPoint point;
    point.illumination_level = level;
    double mean_sum = 0.0;
    for (std::size_t i : indices) mean_sum += crop_mean(flats.frames[i], crop);
    point.mean = mean_sum / static_cast<double>(indices.size());
    double var_sum = 0.0;
    for (std::size_t j = 0; j + 1 < indices.size(); j += 2) {
      var_sum += pair_variance(flats.frames[indices[j]], flats.frames[indices[j + 1]], crop);
      ++point.pairs;
    }
    point.variance = var_sum / static_cast<double>(point.pairs);
    point.used = point.mean <= saturation;
    if (point.used) {
      means.push_back(point.mean);
      variances.push_back(point.variance);
    }
    estimate.points.push_back(point);
  }

  if (means.size() < 2) {
    throw InsufficientDataError("photon transfer needs >= 2 unsaturated illumination levels "
                                "with >= 2 frames each, found " +
                                std::to_string(means.size()));
  }
  const FitLine line = fit_line(means, variances);
  if (!(line.slope > 0.0) || !std::isfinite(line.slope)) {
    throw CalibrationError("photon transfer slope is not positive (" +
                           std::to_string(line.slope) + ")");
  }
  estimate.k = line.slope;
  estimate.variance_intercept = line.intercept;
  return estimate;
}

}  // namespace sensornoise
