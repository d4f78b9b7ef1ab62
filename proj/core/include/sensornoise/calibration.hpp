#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sensornoise/raw_frame.hpp"
#include "sensornoise/rng.hpp"
#include "sensornoise/synthesis.hpp"

namespace sensornoise {

enum class FrameKind { kFlatField, kBias };

// Frames of one camera at one ISO and one geometry. Flat-field frames carry
// an illumination tag per frame; frames sharing a tag form one photon
// transfer level.
struct FrameSet {
  FrameKind kind = FrameKind::kBias;
  std::vector<RawFrame> frames;
  std::vector<double> illumination_level;

  static FrameSet bias(std::vector<RawFrame> frames);
  static FrameSet flat_field(std::vector<RawFrame> frames, std::vector<double> levels);

  // Throws InsufficientDataError / ShapeError / ConfigError.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Photon transfer gain

struct GainOptions {
  // Side of the central crop as a fraction of each frame dimension.
  double center_fraction = 0.5;
  // Levels whose mean signal exceeds this fraction of (white - black) are
  // dropped from the fit.
  double max_level_fraction = 0.6;
};

struct PhotonTransferPoint {
  double illumination_level = 0.0;
  double mean = 0.0;      // DN
  double variance = 0.0;  // temporal variance, DN^2
  std::size_t pairs = 0;
  bool used = true;
};

struct GainEstimate {
  double k = 0.0;                   // DN per electron, slope of variance vs mean
  double variance_intercept = 0.0;  // signal-independent variance, DN^2
  std::vector<PhotonTransferPoint> points;
};

// Throws InsufficientDataError (fewer than two usable levels) and
// CalibrationError (non-positive slope).
GainEstimate estimate_gain(const FrameSet& flats, const GainOptions& options = {});

// ---------------------------------------------------------------------------
// Banding check

struct BandingSpectrum {
  std::size_t width = 0;
  std::size_t height = 0;
  // Centered |DFT|, row-major; DC sits at (height/2, width/2).
  std::vector<float> magnitude;
  // Mean magnitude on the zero-horizontal-frequency line (DC excluded) over
  // the mean magnitude off that line. Row noise drives it well above 1.
  double banding_ratio = 0.0;
  // Same for the zero-vertical-frequency line; column noise diagnostic only.
  double column_ratio = 0.0;
};

BandingSpectrum banding_spectrum(const RawFrame& bias);

// ---------------------------------------------------------------------------
// Row noise

struct RowNoiseEstimate {
  double sigma_r = 0.0;
  double rms_row_mean = 0.0;
  double pixel_variance = 0.0;
  std::size_t width = 0;
  std::vector<double> row_means;  // all rows of all frames
};

// sigma_r^2 = max(0, mean(row_mean^2) - pixel_variance / width).
// Throws InsufficientDataError with fewer than 16 rows in total.
RowNoiseEstimate estimate_row_noise(const FrameSet& biases);

// ---------------------------------------------------------------------------
// Normality test

struct ShapiroWilkResult {
  double w = 0.0;
  double p = 0.0;
  std::size_t n = 0;  // sample size actually tested
};

// Royston (1995) algorithm AS R94 for 3 <= n <= 5000. Inputs larger than
// max_n are randomly subsampled (without replacement) using `rng`.
// Throws InsufficientDataError for n < 3 and DegenerateDataError for zero range.
ShapiroWilkResult shapiro_wilk(std::span<const double> samples, std::size_t max_n = 5000,
                               RngStream rng = RngStream(0, 0));

// The decision rule used in reports: normality is not rejected when p > alpha.
inline bool normality_not_rejected(const ShapiroWilkResult& r, double alpha = 0.05) noexcept {
  return r.p > alpha;
}

// ---------------------------------------------------------------------------
// Probability plots

using QuantileFn = std::function<double(double)>;

// Filliben's estimates of the medians of uniform order statistics.
std::vector<double> filliben_positions(std::size_t n);

struct ProbabilityPlotFit {
  double scale = 0.0;   // slope of order statistics on theoretical quantiles
  double offset = 0.0;  // intercept
  double r2 = 0.0;      // coefficient of determination of that line
};

// Throws InsufficientDataError (n < 3) and DegenerateDataError (zero variance).
ProbabilityPlotFit probability_plot(std::span<const double> samples, const QuantileFn& quantile);

struct PpccGrid {
  double lo = -1.0;
  double hi = 1.0;
  double step = 0.01;

  std::vector<double> values() const;
};

struct PpccPoint {
  double lambda = 0.0;
  double r = 0.0;
};

struct PpccResult {
  double lambda = 0.0;       // maximizer on the grid
  double correlation = 0.0;  // probability plot correlation at the maximizer
  std::vector<PpccPoint> curve;
};

// Tukey lambda PPCC. Ties are broken toward lambda = 0.14.
// Throws InsufficientDataError for n < 10.
PpccResult ppcc_fit(std::span<const double> samples, const PpccGrid& grid = {});

// ---------------------------------------------------------------------------
// Per-ISO calibration

struct CalibrationOptions {
  GainOptions gain;
  // Residual samples used for PPCC and probability plots.
  std::size_t max_fit_samples = 200000;
  std::size_t shapiro_max_n = 5000;
  PpccGrid ppcc_grid;
};

struct CalibrationReport {
  int iso = 0;
  double k_hat = 0.0;
  double lambda_hat = 0.0;
  double sigma_tl_hat = 0.0;
  double sigma_r_hat = 0.0;
  // Shapiro-Wilk on the per-row means (row noise normality).
  double shapiro_w = 0.0;
  double shapiro_p = 0.0;
  bool row_noise_gaussian = false;
  // Shapiro-Wilk on the row-corrected read-noise residuals.
  double residual_shapiro_w = 0.0;
  double residual_shapiro_p = 0.0;
  bool residual_gaussian = false;
  double r2_gauss = 0.0;
  double r2_tl = 0.0;
  double banding_ratio = 0.0;
  double column_ratio = 0.0;
  // Centered spectrum magnitudes along the zero-horizontal-frequency line
  // (top to bottom) and the zero-vertical-frequency line (left to right).
  std::vector<double> spectrum_vertical_line;
  std::vector<double> spectrum_horizontal_line;
  std::vector<PpccPoint> ppcc_curve;
  std::vector<PhotonTransferPoint> transfer_points;
  std::size_t residual_samples = 0;
};

CalibrationReport calibrate_iso(const FrameSet& flats, const FrameSet& biases,
                                const CalibrationOptions& options = {},
                                RngStream rng = RngStream(0, 0));

// Subtracts each row's mean in place.
void subtract_row_means(RawFrame& frame) noexcept;

// ---------------------------------------------------------------------------
// Joint parameter model

struct IsoParams {
  double k = 0.0;
  double lambda = 0.0;
  double sigma_tl = 0.0;
  double sigma_r = 0.0;

  bool operator==(const IsoParams&) const = default;
};

// Regresses log2 sigma_tl and log2 sigma_r on log2 K across ISOs.
// Throws InsufficientDataError with fewer than three ISOs.
JointParamModel fit_joint_model(const std::map<int, IsoParams>& per_iso);

struct CameraProfile {
  std::string camera_id;
  std::map<int, IsoParams> per_iso;
  JointParamModel joint;

  bool operator==(const CameraProfile&) const = default;
};

CameraProfile make_profile(std::string camera_id, std::map<int, IsoParams> per_iso);

}  // namespace sensornoise
