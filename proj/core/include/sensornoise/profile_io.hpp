#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sensornoise/calibration.hpp"

namespace sensornoise {

inline constexpr int kProfileFormatVersion = 1;

// JSON document: camera_id, per_iso table, joint model
// (log_k_min, log_k_max, tl_line{a,b,sigma,n}, row_line{a,b,sigma,n},
// lambda_pool) and format_version. Doubles are written with round-trip
// precision so parse(serialize(p)) == p.
std::string serialize_profile(const CameraProfile& profile);
// Throws FormatError with the offending field; the parsed joint model is
// validated.
CameraProfile parse_profile(const std::string& text, const std::string& origin = "profile");

void write_profile(const CameraProfile& profile, const std::filesystem::path& path);
CameraProfile read_profile(const std::filesystem::path& path);

// Calibration diagnostics as a plot-ready JSON document.
std::string serialize_reports(const std::string& camera_id,
                              const std::vector<CalibrationReport>& reports);

}  // namespace sensornoise
