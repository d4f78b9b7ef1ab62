#include "sensornoise/profile_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_codec.hpp"
#include "sensornoise/frame_io.hpp"

namespace sensornoise {

namespace detail {

json to_json(const NoiseParams& p) {
  return {{"K", p.k},
          {"lambda", p.lambda},
          {"sigma_tl", p.sigma_tl},
          {"sigma_r", p.sigma_r},
          {"q", p.q},
          {"enabled", p.enabled.to_string()}};
}

NoiseParams noise_params_from_json(const json& j, const std::string& where) {
  NoiseParams p;
  p.k = get_field<double>(j, "K", where);
  p.lambda = get_field<double>(j, "lambda", where);
  p.sigma_tl = get_field<double>(j, "sigma_tl", where);
  p.sigma_r = get_field<double>(j, "sigma_r", where);
  p.q = get_field<double>(j, "q", where);
  try {
    p.enabled = ComponentSet::parse(get_field<std::string>(j, "enabled", where));
    p.validate();
  } catch (const Error& e) {
    throw FormatError(where + ": noise_params: " + e.what());
  }
  return p;
}

json to_json(const FitLine& line) {
  return {{"a", line.slope}, {"b", line.intercept}, {"sigma", line.resid_std},
          {"n", line.n_points}};
}

FitLine fit_line_from_json(const json& j, const std::string& where) {
  FitLine line;
  line.slope = get_field<double>(j, "a", where);
  line.intercept = get_field<double>(j, "b", where);
  line.resid_std = get_field<double>(j, "sigma", where);
  line.n_points = get_field<std::size_t>(j, "n", where);
  return line;
}

namespace {

// JSON has no infinity; emit null for non-finite diagnostics.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const CalibrationReport& r) {
  json curve = json::array();
  for (const auto& pt : r.ppcc_curve) curve.push_back({{"lambda", pt.lambda}, {"r", pt.r}});
  json transfer = json::array();
  for (const auto& pt : r.transfer_points) {
    transfer.push_back({{"illumination_level", pt.illumination_level},
                        {"mean", pt.mean},
                        {"variance", pt.variance},
                        {"pairs", pt.pairs},
                        {"used", pt.used}});
  }
  return {{"iso", r.iso},
          {"k_hat", r.k_hat},
          {"lambda_hat", r.lambda_hat},
          {"sigma_tl_hat", r.sigma_tl_hat},
          {"sigma_r_hat", r.sigma_r_hat},
          {"shapiro_w", r.shapiro_w},
          {"shapiro_p", r.shapiro_p},
          {"row_noise_gaussian", r.row_noise_gaussian},
          {"residual_shapiro_w", r.residual_shapiro_w},
          {"residual_shapiro_p", r.residual_shapiro_p},
          {"residual_gaussian", r.residual_gaussian},
          {"r2_gauss", r.r2_gauss},
          {"r2_tl", r.r2_tl},
          {"banding_ratio", finite_or_null(r.banding_ratio)},
          {"column_ratio", finite_or_null(r.column_ratio)},
          {"residual_samples", r.residual_samples},
          {"spectrum_vertical_line", r.spectrum_vertical_line},
          {"spectrum_horizontal_line", r.spectrum_horizontal_line},
          {"ppcc_curve", std::move(curve)},
          {"photon_transfer", std::move(transfer)}};
}

}  // namespace detail

using detail::get_field;
using detail::json;

std::string serialize_profile(const CameraProfile& profile) {
  json per_iso = json::array();
  for (const auto& [iso, p] : profile.per_iso) {
    per_iso.push_back({{"iso", iso},
                       {"K", p.k},
                       {"lambda", p.lambda},
                       {"sigma_tl", p.sigma_tl},
                       {"sigma_r", p.sigma_r}});
  }
  const JointParamModel& m = profile.joint;
  json doc = {{"format_version", kProfileFormatVersion},
              {"camera_id", profile.camera_id},
              {"per_iso", std::move(per_iso)},
              {"joint",
               {{"log_k_min", m.log_k_min},
                {"log_k_max", m.log_k_max},
                {"tl_line", detail::to_json(m.tl_line)},
                {"row_line", detail::to_json(m.row_line)},
                {"lambda_pool", m.lambda_pool}}}};
  return doc.dump(2) + "\n";
}

CameraProfile parse_profile(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(origin + ": invalid JSON (" + e.what() + ")");
  }
  const int version = get_field<int>(doc, "format_version", origin);
  if (version != kProfileFormatVersion) {
    throw FormatError(origin + ": unsupported format_version " + std::to_string(version));
  }

  CameraProfile profile;
  profile.camera_id = get_field<std::string>(doc, "camera_id", origin);
  const json per_iso = get_field<json>(doc, "per_iso", origin);
  if (!per_iso.is_array()) throw FormatError(origin + ": field 'per_iso' must be an array");
  for (const auto& row : per_iso) {
    const int iso = get_field<int>(row, "iso", origin + ".per_iso");
    IsoParams p;
    p.k = get_field<double>(row, "K", origin + ".per_iso");
    p.lambda = get_field<double>(row, "lambda", origin + ".per_iso");
    p.sigma_tl = get_field<double>(row, "sigma_tl", origin + ".per_iso");
    p.sigma_r = get_field<double>(row, "sigma_r", origin + ".per_iso");
    profile.per_iso[iso] = p;
  }

  const json joint = get_field<json>(doc, "joint", origin);
  const std::string jw = origin + ".joint";
  JointParamModel& m = profile.joint;
  m.log_k_min = get_field<double>(joint, "log_k_min", jw);
  m.log_k_max = get_field<double>(joint, "log_k_max", jw);
  m.tl_line = detail::fit_line_from_json(get_field<json>(joint, "tl_line", jw), jw + ".tl_line");
  m.row_line =
      detail::fit_line_from_json(get_field<json>(joint, "row_line", jw), jw + ".row_line");
  m.lambda_pool = get_field<std::vector<double>>(joint, "lambda_pool", jw);
  try {
    m.validate();
  } catch (const Error& e) {
    throw FormatError(jw + ": " + e.what());
  }
  return profile;
}

void write_profile(const CameraProfile& profile, const std::filesystem::path& path) {
  write_text_atomic(path, serialize_profile(profile));
}

CameraProfile read_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open profile");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), path.string());
}

std::string serialize_reports(const std::string& camera_id,
                              const std::vector<CalibrationReport>& reports) {
  json list = json::array();
  for (const auto& r : reports) list.push_back(detail::to_json(r));
  json doc = {{"format_version", kProfileFormatVersion},
              {"camera_id", camera_id},
              {"reports", std::move(list)}};
  return doc.dump(2) + "\n";
}

}  // namespace sensornoise
