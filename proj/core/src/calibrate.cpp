#include <cmath>
#include <string>

#include "sampling.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

constexpr std::uint64_t kRowShapiroStream = 0;
constexpr std::uint64_t kResidualStream = 1;
constexpr std::uint64_t kResidualShapiroStream = 2;

// Row-corrected residuals at a random subset of pixel positions across all
// bias frames. `row_means` holds every row of every frame in order.
std::vector<double> sample_residuals(const FrameSet& biases,
                                     const std::vector<double>& row_means, std::size_t max_n,
                                     RngStream rng) {
  const std::size_t w = biases.frames.front().width();
  const std::size_t h = biases.frames.front().height();
  const std::size_t per_frame = w * h;
  const std::size_t total = per_frame * biases.frames.size();
  std::vector<double> out;
  out.reserve(std::min(max_n, total));
  for (std::size_t idx : detail::choose_indices(total, max_n, rng)) {
    const std::size_t frame = idx / per_frame;
    const std::size_t pixel = idx % per_frame;
    const std::size_t row = pixel / w;
    out.push_back(biases.frames[frame].samples()[pixel] - row_means[frame * h + row]);
  }
  return out;
}

}  // namespace

FrameSet FrameSet::bias(std::vector<RawFrame> frames) {
  FrameSet s;
  s.kind = FrameKind::kBias;
  s.frames = std::move(frames);
  return s;
}

FrameSet FrameSet::flat_field(std::vector<RawFrame> frames, std::vector<double> levels) {
  FrameSet s;
  s.kind = FrameKind::kFlatField;
  s.frames = std::move(frames);
  s.illumination_level = std::move(levels);
  return s;
}

void FrameSet::validate() const {
  const std::size_t needed = kind == FrameKind::kFlatField ? 2 : 1;
  if (frames.size() < needed) {
    throw InsufficientDataError(std::string(kind == FrameKind::kFlatField ? "flat-field" : "bias") +
                                " set needs >= " + std::to_string(needed) + " frames, got " +
                                std::to_string(frames.size()));
  }
  const RawFrame& first = frames.front();
  for (const auto& f : frames) {
    if (!f.same_geometry(first)) throw ShapeError("frame set mixes frame geometries");
    if (f.info().iso != first.info().iso || f.info().camera_id != first.info().camera_id) {
      throw ConfigError("frame set mixes cameras or ISO settings");
    }
  }
  if (kind == FrameKind::kFlatField && illumination_level.size() != frames.size()) {
    throw ConfigError("every flat-field frame needs an illumination level");
  }
}

CalibrationReport calibrate_iso(const FrameSet& flats, const FrameSet& biases,
                                const CalibrationOptions& options, RngStream rng) {
  flats.validate();
  biases.validate();
  if (biases.kind != FrameKind::kBias) throw ConfigError("calibrate_iso expects bias frames");
  const int iso = biases.frames.front().info().iso;
  if (flats.frames.front().info().iso != iso) {
    throw ConfigError("flat-field and bias frames were taken at different ISO settings");
  }

  CalibrationReport report;
  report.iso = iso;

  const GainEstimate gain = estimate_gain(flats, options.gain);
  report.k_hat = gain.k;
  report.transfer_points = gain.points;

  const BandingSpectrum spectrum = banding_spectrum(biases.frames.front());
  report.banding_ratio = spectrum.banding_ratio;
  report.column_ratio = spectrum.column_ratio;
  for (std::size_t r = 0; r < spectrum.height; ++r) {
    report.spectrum_vertical_line.push_back(
        spectrum.magnitude[r * spectrum.width + spectrum.width / 2]);
  }
  for (std::size_t c = 0; c < spectrum.width; ++c) {
    report.spectrum_horizontal_line.push_back(
        spectrum.magnitude[(spectrum.height / 2) * spectrum.width + c]);
  }

  const RowNoiseEstimate row = estimate_row_noise(biases);
  report.sigma_r_hat = row.sigma_r;

  const std::vector<double> residuals = sample_residuals(
      biases, row.row_means, options.max_fit_samples, rng.substream(kResidualStream));
  report.residual_samples = residuals.size();

  const PpccResult ppcc = ppcc_fit(residuals, options.ppcc_grid);
  report.lambda_hat = ppcc.lambda;
  report.ppcc_curve = ppcc.curve;

  const double lambda = ppcc.lambda;
  const ProbabilityPlotFit tl_fit = probability_plot(
      residuals, [lambda](double p) { return tukey_lambda_quantile(p, lambda); });
  const ProbabilityPlotFit gauss_fit =
      probability_plot(residuals, [](double p) { return normal_quantile(p); });
  report.sigma_tl_hat = tl_fit.scale;
  report.r2_tl = tl_fit.r2;
  report.r2_gauss = gauss_fit.r2;

  const ShapiroWilkResult row_sw =
      shapiro_wilk(row.row_means, options.shapiro_max_n, rng.substream(kRowShapiroStream));
  report.shapiro_w = row_sw.w;
  report.shapiro_p = row_sw.p;
  report.row_noise_gaussian = normality_not_rejected(row_sw);

  const ShapiroWilkResult resid_sw =
      shapiro_wilk(residuals, options.shapiro_max_n, rng.substream(kResidualShapiroStream));
  report.residual_shapiro_w = resid_sw.w;
  report.residual_shapiro_p = resid_sw.p;
  report.residual_gaussian = normality_not_rejected(resid_sw);
  return report;
}

}  // namespace sensornoise
