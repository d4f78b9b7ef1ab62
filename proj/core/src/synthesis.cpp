#include "sensornoise/synthesis.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"
#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

// Substream layout below the stream handed to synthesize_pair.
constexpr std::uint64_t kParamStream = 0;
constexpr std::uint64_t kFactorStream = 1;
constexpr std::uint64_t kNoiseStream = 2;

void require_factor(double factor) {
  if (!(factor >= 1.0) || !std::isfinite(factor)) {
    throw DomainError("low-light factor must be finite and >= 1, got " + std::to_string(factor));
  }
}

}  // namespace

void JointParamModel::validate() const {
  if (!std::isfinite(log_k_min) || !std::isfinite(log_k_max) || log_k_min > log_k_max) {
    throw ConfigError("joint model requires finite log_k_min <= log_k_max");
  }
  for (const FitLine* line : {&tl_line, &row_line}) {
    if (!std::isfinite(line->slope) || !std::isfinite(line->intercept) ||
        !(line->resid_std >= 0.0) || !std::isfinite(line->resid_std)) {
      throw ConfigError("joint model line has non-finite or negative terms");
    }
  }
  if (lambda_pool.empty()) throw ConfigError("joint model lambda_pool is empty");
  for (double l : lambda_pool) {
    if (!(l >= -1.0 && l <= 1.0)) throw ConfigError("lambda_pool value outside [-1, 1]");
  }
}

void SynthesisConfig::validate() const {
  if (!(f_min >= 1.0) || !(f_min <= f_max) || !std::isfinite(f_max)) {
    throw ConfigError("synthesis config requires 1 <= f_min <= f_max");
  }
  if (!(quant_step >= 0.0) || !std::isfinite(quant_step)) {
    throw ConfigError("quant_step must be finite and >= 0");
  }
}

NoiseParams sample_noise_params(const JointParamModel& model, RngStream rng,
                                double quant_step, ComponentSet components) {
  model.validate();
  NoiseParams p;
  const double u = rng.next_uniform();
  const double log_k =
      model.log_k_min == model.log_k_max
          ? model.log_k_min
          : model.log_k_min + (model.log_k_max - model.log_k_min) * u;
  const double log_tl = model.tl_line(log_k) + draw_gaussian(model.tl_line.resid_std, rng);
  const double log_r = model.row_line(log_k) + draw_gaussian(model.row_line.resid_std, rng);
  p.k = std::exp2(log_k);
  p.sigma_tl = std::exp2(log_tl);
  p.sigma_r = std::exp2(log_r);
  p.lambda = model.lambda_pool[rng.next_below(model.lambda_pool.size())];
  p.q = quant_step;
  p.enabled = components;
  return p;
}

RawFrame synthesize_noise(const RawFrame& clean_electrons, const NoiseParams& params,
                          RngStream rng, NoiseOptions options, unsigned threads) {
  params.validate();
  for (double v : clean_electrons.samples()) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("synthesize_noise: input electrons must be finite and >= 0");
    }
  }

  const bool shot = params.enabled.contains(NoiseComponent::kShot);
  const bool read = params.enabled.contains(NoiseComponent::kRead);
  const bool row = params.enabled.contains(NoiseComponent::kRow);
  const bool quant = params.enabled.contains(NoiseComponent::kQuant);

  const RngStream shot_root = rng.substream(static_cast<std::uint64_t>(NoiseComponent::kShot));
  const RngStream read_root = rng.substream(static_cast<std::uint64_t>(NoiseComponent::kRead));
  const RngStream row_root = rng.substream(static_cast<std::uint64_t>(NoiseComponent::kRow));
  const RngStream quant_root =
      rng.substream(static_cast<std::uint64_t>(NoiseComponent::kQuant));

  RawFrame out = clean_electrons;
  const double k = params.k;
  const double half_q = 0.5 * params.q;
  const double hi = out.info().range();

  detail::parallel_for(out.height(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      RngStream shot_rng = shot_root.substream(r);
      RngStream read_rng = read_root.substream(r);
      RngStream quant_rng = quant_root.substream(r);
      double offset = 0.0;
      if (row) {
        RngStream row_rng = row_root;
        row_rng.seek(r);
        offset = draw_gaussian(params.sigma_r, row_rng);
      }
      auto in = clean_electrons.row(r);
      auto dst = out.row(r);
      for (std::size_t c = 0; c < dst.size(); ++c) {
        double v = shot ? k * static_cast<double>(draw_poisson(in[c], shot_rng)) : k * in[c];
        if (read) v += draw_tukey_lambda(params.lambda, params.sigma_tl, read_rng);
        v += offset;
        if (quant) v += draw_uniform(half_q, quant_rng);
        if (options.clip) v = std::clamp(v, 0.0, hi);
        dst[c] = v;
      }
    }
  });
  return out;
}

RawFrame darken(const RawFrame& clean, double factor) {
  require_factor(factor);
  RawFrame out = clean;
  for (double& v : out.samples()) v /= factor;
  return out;
}

RawFrame restore(const RawFrame& noisy, double factor, bool clip) {
  require_factor(factor);
  RawFrame out = noisy;
  for (double& v : out.samples()) v *= factor;
  if (clip) clip_to_range(out);
  return out;
}

SynthesizedPair synthesize_pair(const RawFrame& clean, const JointParamModel& model,
                                const SynthesisConfig& config, RngStream rng,
                                unsigned threads) {
  config.validate();
  const double hi = clean.info().range();
  for (double v : clean.samples()) {
    if (!(v >= 0.0 && v <= hi)) {
      throw DomainError("synthesize_pair: clean samples must lie in [0, white - black]");
    }
  }

  RngStream factor_rng = rng.substream(kFactorStream);
  const double factor =
      config.f_min == config.f_max
          ? config.f_min
          : config.f_min + (config.f_max - config.f_min) * factor_rng.next_uniform();
  const NoiseParams params = sample_noise_params(model, rng.substream(kParamStream),
                                                 config.quant_step, config.components);

  RawFrame electrons = darken(clean, factor);
  for (double& v : electrons.samples()) v /= params.k;

  RawFrame noisy = synthesize_noise(electrons, params, rng.substream(kNoiseStream),
                                    NoiseOptions{config.clip}, threads);
  noisy = restore(noisy, factor, config.clip);
  if (config.quantize_output) {
    for (double& v : noisy.samples()) v = std::nearbyint(v);
  }
  return SynthesizedPair{std::move(noisy), clean, params, factor};
}

}  // namespace sensornoise
