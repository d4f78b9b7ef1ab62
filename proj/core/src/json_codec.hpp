#pragma once

#include <string>

#include "json.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/errors.hpp"
#include "sensornoise/noise_params.hpp"

namespace sensornoise::detail {

using nlohmann::json;

// Field access that reports the document and key on failure.
template <typename T>
T get_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(where + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(where + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

json to_json(const NoiseParams& p);
NoiseParams noise_params_from_json(const json& j, const std::string& where);

json to_json(const FitLine& line);
FitLine fit_line_from_json(const json& j, const std::string& where);

json to_json(const CalibrationReport& report);

}  // namespace sensornoise::detail
