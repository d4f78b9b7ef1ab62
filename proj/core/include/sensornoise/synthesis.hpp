#pragma once

#include <cstdint>
#include <vector>

#include "sensornoise/fit_line.hpp"
#include "sensornoise/noise_params.hpp"
#include "sensornoise/raw_frame.hpp"
#include "sensornoise/rng.hpp"

namespace sensornoise {

// Conditional sampler for camera noise parameters:
//   log K            ~ U(log_k_min, log_k_max)
//   log sigma_tl | K ~ N(tl_line(log K), tl_line.resid_std)
//   log sigma_r  | K ~ N(row_line(log K), row_line.resid_std)
//   lambda           ~ uniform over lambda_pool
// All logarithms are base 2.
struct JointParamModel {
  double log_k_min = 0.0;
  double log_k_max = 0.0;
  FitLine tl_line;
  FitLine row_line;
  std::vector<double> lambda_pool;

  // Throws ConfigError.
  void validate() const;

  bool operator==(const JointParamModel&) const = default;
};

struct SynthesisConfig {
  double f_min = 100.0;
  double f_max = 300.0;
  bool clip = true;
  bool quantize_output = true;
  double quant_step = 1.0;
  ComponentSet components = ComponentSet::all();

  void validate() const;
};

struct NoiseOptions {
  bool clip = true;
};

NoiseParams sample_noise_params(const JointParamModel& model, RngStream rng,
                                double quant_step = 1.0,
                                ComponentSet components = ComponentSet::all());

// Applies the four-component model to a frame in electron units and returns
// a frame in DN:
//   D = K * Poisson(I) + TL(lambda; 0, sigma_tl) + row offset + U(-q/2, q/2)
// The row offset is one Gaussian draw per image row. Disabled components
// contribute their noiseless value. Each component and row reads its own
// substream, so output does not depend on `threads`.
RawFrame synthesize_noise(const RawFrame& clean_electrons, const NoiseParams& params,
                          RngStream rng, NoiseOptions options = {}, unsigned threads = 1);

RawFrame darken(const RawFrame& clean, double factor);
RawFrame restore(const RawFrame& noisy, double factor, bool clip = true);

struct SynthesizedPair {
  RawFrame noisy;
  RawFrame clean;
  NoiseParams params;
  double factor = 1.0;
};

// Low-light protocol: draw f and a parameter set, divide the clean DN frame
// by f, convert to electrons with K, add noise, multiply back by f.
SynthesizedPair synthesize_pair(const RawFrame& clean, const JointParamModel& model,
                                const SynthesisConfig& config, RngStream rng,
                                unsigned threads = 1);

}  // namespace sensornoise
