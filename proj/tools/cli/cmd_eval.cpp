#include <cmath>

#include "cli/commands.hpp"
#include "cli/frame_dir.hpp"
#include "sensornoise/csv.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/frame_io.hpp"
#include "sensornoise/metrics.hpp"

namespace snoise {

namespace fs = std::filesystem;
using namespace sensornoise;

void cmd_eval(const EvalArgs& args, std::ostream& out) {
  const auto preds = index_frames(args.pred);
  if (preds.empty()) throw InsufficientDataError(args.pred.string() + ": no frames to evaluate");

  CsvWriter csv(out);
  csv.row({"name", "psnr", "ssim", "align_scalar"});
  double sum_psnr = 0.0, sum_ssim = 0.0, sum_align = 0.0;
  for (const auto& p : preds) {
    const fs::path rel = p.raster.lexically_relative(args.pred);
    const fs::path ref_path = args.ref / rel;
    if (!fs::exists(ref_path)) {
      throw FormatError(ref_path.string() + ": no reference for " + p.raster.string());
    }
    const RawFrame pred = read_frame(p.raster);
    const RawFrame ref = read_frame(ref_path);
    const EvalResult r = evaluate(pred, ref, ref.info().range(), args.align);
    sum_psnr += r.psnr;
    sum_ssim += r.ssim;
    sum_align += r.align_scalar;
    csv.row({rel.generic_string(), csv_number(r.psnr), csv_number(r.ssim),
             csv_number(r.align_scalar)});
  }
  const double n = static_cast<double>(preds.size());
  csv.row({"mean", csv_number(sum_psnr / n), csv_number(sum_ssim / n), csv_number(sum_align / n)});
}

}  // namespace snoise
