#include "cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <thread>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "sensornoise/errors.hpp"

namespace snoise {

namespace {

using sensornoise::ErrorKind;

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kDegenerateData: return "degenerate-data";
    case ErrorKind::kCalibration: return "calibration";
  }
  return "error";
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensor noise synthesis and calibration toolkit", "snoise"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CalibrateArgs cal;
  cal.threads = default_threads();
  auto* calibrate = app.add_subcommand("calibrate", "Estimate a camera profile from flats and biases");
  calibrate->add_option("--flats", cal.flats, "Directory of flat-field frames")->required();
  calibrate->add_option("--biases", cal.biases, "Directory of bias frames")->required();
  calibrate->add_option("--out", cal.out, "Profile JSON to write")->required();
  calibrate->add_option("--report", cal.report, "Diagnostics JSON to write (plus CSV companions)");
  calibrate->add_option("--seed", cal.seed, "Seed for subsampling");
  calibrate->add_option("--threads", cal.threads, "Worker threads")->check(CLI::PositiveNumber);
  calibrate->add_option("--max-fit-samples", cal.max_fit_samples,
                        "Residual samples used for distribution fitting")
      ->check(CLI::Range(std::size_t{10}, std::size_t{100000000}));

  SynthArgs syn;
  syn.threads = default_threads();
  auto* synth = app.add_subcommand("synth", "Synthesize low-light noisy/clean pairs");
  synth->add_option("--clean", syn.clean, "Directory of clean frames")->required();
  synth->add_option("--profile", syn.profile, "Camera profile JSON")->required();
  synth->add_option("--out", syn.out, "Output directory")->required();
  synth->add_option("--count", syn.count, "Number of pairs")->required();
  synth->add_option("--f-min", syn.f_min, "Lower low-light factor");
  synth->add_option("--f-max", syn.f_max, "Upper low-light factor");
  synth->add_option("--seed", syn.seed, "Random seed");
  synth->add_option("--disable", syn.disable, "Comma-separated components: shot,read,row,quant");
  synth->add_option("--kind", syn.kind, "Sidecar kind of the noisy output")
      ->check(CLI::IsMember({"noisy", "bias", "flat"}));
  synth->add_flag("--no-clip", syn.no_clip, "Do not clamp to the sensor range");
  synth->add_flag("--no-quantize", syn.no_quantize, "Do not round the output to integer DN");
  synth->add_option("--threads", syn.threads, "Worker threads")->check(CLI::PositiveNumber);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "PSNR/SSIM of predictions against references (CSV)");
  eval->add_option("--pred", ev.pred, "Directory of predicted frames")->required();
  eval->add_option("--ref", ev.ref, "Directory of reference frames")->required();
  eval->add_flag("--align", ev.align, "Apply the MSE-minimizing brightness scalar first");

  SampleParamsArgs sp;
  auto* sample = app.add_subcommand("sample-params", "Draw noise parameters from a profile (CSV)");
  sample->add_option("--profile", sp.profile, "Camera profile JSON")->required();
  sample->add_option("--count", sp.count, "Number of draws")->required();
  sample->add_option("--seed", sp.seed, "Random seed");
  sample->add_option("--quant-step", sp.quant_step, "Quantization step q in DN");

  PreviewArgs pv;
  auto* preview = app.add_subcommand("preview", "Linear 8-bit RGB preview of a raw frame");
  preview->add_option("--in", pv.in, "Input raster (.pgm with sidecar)")->required();
  preview->add_option("--out", pv.out, "Output image (.ppm)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "snoise: usage error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  const bool calibrating = calibrate->parsed();
  try {
    if (calibrating) cmd_calibrate(cal, out);
    else if (synth->parsed()) cmd_synth(syn, out);
    else if (eval->parsed()) cmd_eval(ev, out);
    else if (sample->parsed()) cmd_sample_params(sp, out);
    else if (preview->parsed()) cmd_preview(pv, out);
  } catch (const sensornoise::Error& e) {
    const ErrorKind k = e.kind();
    const bool calibration_failure =
        k == ErrorKind::kCalibration ||
        (calibrating && (k == ErrorKind::kInsufficientData || k == ErrorKind::kDegenerateData));
    err << "snoise: " << kind_name(k) << " error: " << one_line(e.what()) << "\n";
    return calibration_failure ? kExitCalibration : kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "snoise: io error: " << one_line(e.what()) << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "snoise: error: " << one_line(e.what()) << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace snoise
