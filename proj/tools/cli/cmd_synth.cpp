#include <cstdio>
#include <vector>

#include "cli/commands.hpp"
#include "cli/frame_dir.hpp"
#include "sensornoise/csv.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/frame_io.hpp"
#include "sensornoise/profile_io.hpp"
#include "sensornoise/synthesis.hpp"

namespace snoise {

namespace fs = std::filesystem;
using namespace sensornoise;

namespace {

std::string pair_name(std::size_t index, const char* role) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "pair_%05zu_%s.pgm", index, role);
  return buf;
}

// Removes what a failed run produced: the whole directory if this run created
// it, otherwise only the files it wrote.
class OutputGuard {
 public:
  explicit OutputGuard(const fs::path& dir) : dir_(dir), created_(!fs::exists(dir)) {
    fs::create_directories(dir_);
  }
  OutputGuard(const OutputGuard&) = delete;
  OutputGuard& operator=(const OutputGuard&) = delete;

  ~OutputGuard() {
    if (committed_) return;
    std::error_code ec;
    if (created_) {
      fs::remove_all(dir_, ec);
      return;
    }
    for (const auto& p : written_) {
      fs::remove(p, ec);
      fs::remove(sidecar_path(p), ec);
    }
  }

  void track(const fs::path& raster) { written_.push_back(raster); }
  void commit() { committed_ = true; }

 private:
  fs::path dir_;
  bool created_;
  bool committed_ = false;
  std::vector<fs::path> written_;
};

}  // namespace

void cmd_synth(const SynthArgs& args, std::ostream& out) {
  const CameraProfile profile = read_profile(args.profile);
  const auto cleans = index_frames(args.clean);
  if (cleans.empty()) throw InsufficientDataError(args.clean.string() + ": no clean frames found");

  SynthesisConfig config;
  config.f_min = args.f_min;
  config.f_max = args.f_max;
  config.clip = !args.no_clip;
  config.quantize_output = !args.no_quantize;
  ComponentSet components = ComponentSet::all();
  const ComponentSet disabled = ComponentSet::parse(args.disable);
  for (auto c : {NoiseComponent::kShot, NoiseComponent::kRead, NoiseComponent::kRow,
                 NoiseComponent::kQuant}) {
    if (disabled.contains(c)) components = components.without(c);
  }
  config.components = components;
  config.validate();
  const FrameFileKind noisy_kind = parse_frame_kind(args.kind);

  OutputGuard guard(args.out);
  CsvWriter csv(out);
  csv.row({"index", "clean", "noisy", "factor", "K", "lambda", "sigma_tl", "sigma_r", "q"});

  for (std::size_t j = 0; j < args.count; ++j) {
    const IndexedFrame& src = cleans[j % cleans.size()];
    const FrameFile clean = read_frame_file(src.raster);
    const SynthesizedPair pair =
        synthesize_pair(clean.frame, profile.joint, config, RngStream(args.seed, j), args.threads);

    FrameSidecar noisy_meta;
    noisy_meta.kind = noisy_kind;
    noisy_meta.exposure_time_s = clean.sidecar.exposure_time_s;
    noisy_meta.illumination_level = clean.sidecar.illumination_level;
    noisy_meta.low_light_factor = pair.factor;
    noisy_meta.noise_params = pair.params;
    noisy_meta.seed = args.seed;
    noisy_meta.stream_id = j;
    noisy_meta.source = src.raster.filename().string();

    FrameSidecar clean_meta = clean.sidecar;
    clean_meta.kind = FrameFileKind::kClean;
    clean_meta.source = src.raster.filename().string();

    const fs::path noisy_path = args.out / pair_name(j, "noisy");
    const fs::path clean_path = args.out / pair_name(j, "clean");
    guard.track(noisy_path);
    write_frame(pair.noisy, noisy_meta, noisy_path);
    guard.track(clean_path);
    write_frame(pair.clean, clean_meta, clean_path);

    csv.row({std::to_string(j), clean_path.filename().string(), noisy_path.filename().string(),
             csv_number(pair.factor), csv_number(pair.params.k), csv_number(pair.params.lambda),
             csv_number(pair.params.sigma_tl), csv_number(pair.params.sigma_r),
             csv_number(pair.params.q)});
  }
  guard.commit();
}

}  // namespace snoise
