#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sensornoise/noise_params.hpp"
#include "sensornoise/raw_frame.hpp"

namespace sensornoise {

enum class FrameFileKind { kClean, kNoisy, kBias, kFlat };

std::string_view to_string(FrameFileKind kind) noexcept;
FrameFileKind parse_frame_kind(std::string_view name);

// Everything in a sidecar beyond the SensorInfo carried by RawFrame.
struct FrameSidecar {
  FrameFileKind kind = FrameFileKind::kClean;
  std::optional<double> exposure_time_s;
  std::optional<double> illumination_level;
  std::optional<double> low_light_factor;
  std::optional<NoiseParams> noise_params;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> stream_id;
  std::optional<std::string> source;

  bool operator==(const FrameSidecar&) const = default;
};

// Sidecar contents without the raster.
struct FrameHeader {
  SensorInfo info;
  FrameSidecar sidecar;
  std::size_t width = 0;
  std::size_t height = 0;
};

struct FrameFile {
  RawFrame frame;
  FrameSidecar sidecar;
};

inline constexpr int kFrameFormatVersion = 1;

// "<stem>.json" next to the raster.
std::filesystem::path sidecar_path(const std::filesystem::path& raster);

// Raster: binary PGM (P5), maxval 65535, big-endian 16-bit samples holding
// pre-subtraction DN. Sidecar: JSON with camera and provenance metadata.
//
// On read the black level is subtracted. Clean and noisy frames are clamped
// at 0; bias and flat frames keep negative values because calibration needs
// the full noise distribution around the black level.
// Throws FormatError naming the file and field on any inconsistency.
FrameHeader read_frame_header(const std::filesystem::path& raster);
FrameFile read_frame_file(const std::filesystem::path& raster);
RawFrame read_frame(const std::filesystem::path& raster);

// Samples are re-offset by the black level, rounded and clamped to
// [0, white_level]. Both files are written to a temporary name and renamed.
void write_frame(const RawFrame& frame, const FrameSidecar& sidecar,
                 const std::filesystem::path& raster);

// Atomic text write used for every document the tools emit.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace sensornoise
