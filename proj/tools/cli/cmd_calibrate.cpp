#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cli/commands.hpp"
#include "cli/frame_dir.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/csv.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/profile_io.hpp"

namespace snoise {

namespace fs = std::filesystem;
using namespace sensornoise;

namespace {

struct IsoInputs {
  std::vector<const IndexedFrame*> flats;
  std::vector<const IndexedFrame*> biases;
};

double illumination_key(const IndexedFrame& f) {
  if (f.header.sidecar.illumination_level) return *f.header.sidecar.illumination_level;
  if (f.header.sidecar.exposure_time_s) return *f.header.sidecar.exposure_time_s;
  throw FormatError(sidecar_path(f.raster).string() +
                    ": flat frame needs 'illumination_level' or 'exposure_time_s'");
}

CalibrationReport calibrate_one(int iso, const IsoInputs& inputs, const CalibrateArgs& args) {
  if (inputs.biases.empty()) {
    throw InsufficientDataError("ISO " + std::to_string(iso) + " has flat frames but no bias frames");
  }
  if (inputs.flats.empty()) {
    throw InsufficientDataError("ISO " + std::to_string(iso) + " has bias frames but no flat frames");
  }
  std::vector<RawFrame> flat_frames;
  std::vector<double> levels;
  for (const auto* f : inputs.flats) {
    levels.push_back(illumination_key(*f));
    flat_frames.push_back(read_frame(f->raster));
  }
  std::vector<RawFrame> bias_frames;
  for (const auto* f : inputs.biases) bias_frames.push_back(read_frame(f->raster));

  CalibrationOptions options;
  options.max_fit_samples = args.max_fit_samples;
  return calibrate_iso(FrameSet::flat_field(std::move(flat_frames), std::move(levels)),
                       FrameSet::bias(std::move(bias_frames)), options,
                       RngStream(args.seed, static_cast<std::uint64_t>(iso)));
}

void write_report_files(const fs::path& path, const std::string& camera_id,
                        const std::vector<CalibrationReport>& reports) {
  write_text_atomic(path, serialize_reports(camera_id, reports));

  std::ostringstream ppcc;
  CsvWriter ppcc_csv(ppcc);
  ppcc_csv.row({"iso", "lambda", "r"});
  std::ostringstream ptc;
  CsvWriter ptc_csv(ptc);
  ptc_csv.row({"iso", "illumination_level", "mean", "variance", "used"});
  for (const auto& r : reports) {
    for (const auto& pt : r.ppcc_curve) {
      ppcc_csv.row({std::to_string(r.iso), csv_number(pt.lambda), csv_number(pt.r)});
    }
    for (const auto& pt : r.transfer_points) {
      ptc_csv.row({std::to_string(r.iso), csv_number(pt.illumination_level), csv_number(pt.mean),
                   csv_number(pt.variance), pt.used ? "1" : "0"});
    }
  }
  fs::path stem = path;
  stem.replace_extension();
  write_text_atomic(stem.string() + "_ppcc.csv", ppcc.str());
  write_text_atomic(stem.string() + "_ptc.csv", ptc.str());
}

}  // namespace

void cmd_calibrate(const CalibrateArgs& args, std::ostream& out) {
  const auto flats = index_frames(args.flats);
  const auto biases = index_frames(args.biases);

  std::string camera_id;
  bool have_camera = false;
  std::map<int, IsoInputs> by_iso;
  const auto add = [&](const IndexedFrame& f, bool is_flat) {
    if (!have_camera) {
      camera_id = f.header.info.camera_id;
      have_camera = true;
    } else if (f.header.info.camera_id != camera_id) {
      throw ConfigError(f.raster.string() + ": camera_id '" + f.header.info.camera_id +
                        "' differs from '" + camera_id + "'");
    }
    auto& slot = by_iso[f.header.info.iso];
    (is_flat ? slot.flats : slot.biases).push_back(&f);
  };
  for (const auto& f : flats) {
    if (f.header.sidecar.kind == FrameFileKind::kFlat) add(f, true);
  }
  for (const auto& f : biases) {
    if (f.header.sidecar.kind == FrameFileKind::kBias) add(f, false);
  }
  if (by_iso.empty()) throw InsufficientDataError("no flat or bias frames found");

  std::vector<int> isos;
  for (const auto& [iso, _] : by_iso) isos.push_back(iso);
  std::vector<CalibrationReport> reports(isos.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < isos.size(); i = next++) {
      try {
        reports[i] = calibrate_one(isos[i], by_iso.at(isos[i]), args);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    const unsigned n = std::max(1u, std::min<unsigned>(args.threads, isos.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  if (args.report) write_report_files(*args.report, camera_id, reports);

  std::map<int, IsoParams> per_iso;
  for (const auto& r : reports) {
    per_iso[r.iso] = IsoParams{r.k_hat, r.lambda_hat, r.sigma_tl_hat, r.sigma_r_hat};
  }
  const CameraProfile profile = make_profile(camera_id, per_iso);
  write_profile(profile, args.out);

  CsvWriter csv(out);
  csv.row({"iso", "K", "lambda", "sigma_tl", "sigma_r", "r2_gauss", "r2_tl", "shapiro_p",
           "banding_ratio"});
  for (const auto& r : reports) {
    csv.row({std::to_string(r.iso), csv_number(r.k_hat), csv_number(r.lambda_hat),
             csv_number(r.sigma_tl_hat), csv_number(r.sigma_r_hat), csv_number(r.r2_gauss),
             csv_number(r.r2_tl), csv_number(r.shapiro_p), csv_number(r.banding_ratio)});
  }
}

}  // namespace snoise
