#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace snoise {

struct CalibrateArgs {
  std::filesystem::path flats;
  std::filesystem::path biases;
  std::filesystem::path out;
  std::optional<std::filesystem::path> report;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t max_fit_samples = 200000;
};

struct SynthArgs {
  std::filesystem::path clean;
  std::filesystem::path profile;
  std::filesystem::path out;
  std::size_t count = 1;
  double f_min = 100.0;
  double f_max = 300.0;
  std::uint64_t seed = 0;
  std::string disable;
  std::string kind = "noisy";
  bool no_clip = false;
  bool no_quantize = false;
  unsigned threads = 1;
};

struct EvalArgs {
  std::filesystem::path pred;
  std::filesystem::path ref;
  bool align = false;
};

struct SampleParamsArgs {
  std::filesystem::path profile;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double quant_step = 1.0;
};

struct PreviewArgs {
  std::filesystem::path in;
  std::filesystem::path out;
};

void cmd_calibrate(const CalibrateArgs& args, std::ostream& out);
void cmd_synth(const SynthArgs& args, std::ostream& out);
void cmd_eval(const EvalArgs& args, std::ostream& out);
void cmd_sample_params(const SampleParamsArgs& args, std::ostream& out);
void cmd_preview(const PreviewArgs& args, std::ostream& out);

}  // namespace snoise
