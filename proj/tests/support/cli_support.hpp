#pragma once

// Drives the `snoise` entry point in-process and builds calibration inputs
// the way a user would: clean frames on disk, then `synth`.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/frame_io.hpp"
#include "sensornoise/profile_io.hpp"

namespace clitest {

namespace fs = std::filesystem;
using namespace sensornoise;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = snoise::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline void must(const std::vector<std::string>& args) {
  const CliResult r = run_cli(args);
  if (r.code != 0) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    throw std::runtime_error("snoise " + joined + "failed (" + std::to_string(r.code) + "): " + r.err);
  }
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) : path_(fs::temp_directory_path() / ("sn_" + tag)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Relative path -> bytes for every regular file under `root`.
inline std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
  }
  return files;
}

inline SensorInfo fixture_info(const std::string& camera, int iso) {
  SensorInfo info;
  info.black_level = 16384;
  info.white_level = 65535;
  info.iso = iso;
  info.camera_id = camera;
  return info;
}

// A profile whose sampler always returns `truth`.
inline CameraProfile point_profile(const std::string& camera, int iso, const IsoParams& truth) {
  CameraProfile p;
  p.camera_id = camera;
  p.per_iso[iso] = truth;
  const double lk = std::log2(truth.k);
  p.joint.log_k_min = p.joint.log_k_max = lk;
  p.joint.tl_line = FitLine{0.0, std::log2(truth.sigma_tl), 0.0, 2};
  p.joint.row_line = FitLine{0.0, std::log2(truth.sigma_r), 0.0, 2};
  p.joint.lambda_pool = {truth.lambda};
  return p;
}

struct CalibrationGeometry {
  std::size_t flat_width = 1024, flat_height = 1024, flats_per_level = 2;
  std::vector<double> levels{500, 1000, 2000, 4000};  // electrons
  std::size_t bias_width = 2048, bias_height = 2048, bias_count = 2;
};

// Writes flats/iso_<iso>/ and biases/iso_<iso>/ under `root` by running
// `synth` on noiseless inputs with a point profile: flats at each level and
// dark frames, no darkening (f = 1) and no clipping.
inline void materialize_iso(const fs::path& root, const std::string& camera, int iso, const IsoParams& truth,
                            const CalibrationGeometry& g, std::uint64_t seed, unsigned threads = 1) {
  const fs::path work = root / ("work_" + std::to_string(iso));
  fs::create_directories(work / "clean_flats");
  fs::create_directories(work / "clean_bias");
  const fs::path profile = work / "point_profile.json";
  write_profile(point_profile(camera, iso, truth), profile);

  for (std::size_t i = 0; i < g.levels.size(); ++i) {
    FrameSidecar meta;
    meta.kind = FrameFileKind::kClean;
    meta.illumination_level = g.levels[i];
    char name[32];
    std::snprintf(name, sizeof(name), "level_%02zu.pgm", i);
    write_frame(RawFrame(g.flat_width, g.flat_height, fixture_info(camera, iso), g.levels[i] * truth.k), meta,
                work / "clean_flats" / name);
  }
  write_frame(RawFrame(g.bias_width, g.bias_height, fixture_info(camera, iso), 0.0), FrameSidecar{},
              work / "clean_bias" / "dark.pgm");

  const std::string t = std::to_string(threads);
  const fs::path flats_out = root / "flats" / ("iso_" + std::to_string(iso));
  const fs::path bias_out = root / "biases" / ("iso_" + std::to_string(iso));
  must({"synth", "--clean", (work / "clean_flats").string(), "--profile", profile.string(), "--out",
        flats_out.string(), "--count", std::to_string(g.levels.size() * g.flats_per_level), "--f-min", "1",
        "--f-max", "1", "--seed", std::to_string(seed), "--kind", "flat", "--no-clip", "--threads", t});
  must({"synth", "--clean", (work / "clean_bias").string(), "--profile", profile.string(), "--out",
        bias_out.string(), "--count", std::to_string(g.bias_count), "--f-min", "1", "--f-max", "1", "--seed",
        std::to_string(seed + 1), "--kind", "bias", "--no-clip", "--threads", t});

  // The clean halves of each pair are not needed for calibration.
  std::vector<fs::path> unused;
  for (const fs::path& dir : {flats_out, bias_out}) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.path().filename().string().find("_clean.") != std::string::npos) unused.push_back(e.path());
    }
  }
  for (const auto& p : unused) fs::remove(p);
  fs::remove_all(work);
}

}  // namespace clitest
