#include "cli/commands.hpp"
#include "sensornoise/csv.hpp"
#include "sensornoise/profile_io.hpp"
#include "sensornoise/synthesis.hpp"

namespace snoise {

using namespace sensornoise;

void cmd_sample_params(const SampleParamsArgs& args, std::ostream& out) {
  const CameraProfile profile = read_profile(args.profile);
  CsvWriter csv(out);
  csv.row({"index", "K", "lambda", "sigma_tl", "sigma_r", "q"});
  for (std::size_t i = 0; i < args.count; ++i) {
    const NoiseParams p = sample_noise_params(profile.joint, RngStream(args.seed, i), args.quant_step);
    csv.row({std::to_string(i), csv_number(p.k), csv_number(p.lambda), csv_number(p.sigma_tl),
             csv_number(p.sigma_r), csv_number(p.q)});
  }
}

}  // namespace snoise
