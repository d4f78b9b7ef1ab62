#include "sensornoise/frame_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json_codec.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace fs = std::filesystem;
using detail::get_field;
using detail::json;

namespace {

constexpr std::array<std::pair<FrameFileKind, std::string_view>, 4> kKindNames{{
    {FrameFileKind::kClean, "clean"},
    {FrameFileKind::kNoisy, "noisy"},
    {FrameFileKind::kBias, "bias"},
    {FrameFileKind::kFlat, "flat"},
}};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Reads the next whitespace-delimited header token, skipping '#' comments.
std::string pgm_token(const std::string& bytes, std::size_t& pos, const fs::path& path) {
  for (;;) {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  const std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
  if (start == pos) throw FormatError(path.string() + ": truncated PGM header");
  return bytes.substr(start, pos - start);
}

std::size_t parse_dim(const std::string& token, const fs::path& path, const char* field) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used != token.size() || v <= 0) throw std::invalid_argument(token);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw FormatError(path.string() + ": invalid PGM " + field + " '" + token + "'");
  }
}

}  // namespace

std::string_view to_string(FrameFileKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "clean";
}

FrameFileKind parse_frame_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw FormatError("unknown frame kind '" + std::string(name) + "'");
}

fs::path sidecar_path(const fs::path& raster) {
  fs::path p = raster;
  p.replace_extension(".json");
  return p;
}

void write_text_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError(path.string() + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw FormatError(path.string() + ": write failed");
  }
  fs::rename(tmp, path);
}

FrameHeader read_frame_header(const fs::path& raster) {
  const fs::path side = sidecar_path(raster);
  if (!fs::exists(side)) throw FormatError(raster.string() + ": missing sidecar " + side.string());

  json meta;
  try {
    meta = json::parse(read_file(side));
  } catch (const json::parse_error& e) {
    throw FormatError(side.string() + ": invalid JSON (" + e.what() + ")");
  }
  const std::string where = side.string();

  FrameHeader header;
  SensorInfo& info = header.info;
  info.camera_id = get_field<std::string>(meta, "camera_id", where);
  info.iso = get_field<int>(meta, "iso", where);
  try {
    info.bayer_pattern = parse_bayer_pattern(get_field<std::string>(meta, "bayer_pattern", where));
  } catch (const FormatError& e) {
    throw FormatError(where + ": field 'bayer_pattern': " + e.what());
  }
  info.black_level = get_field<double>(meta, "black_level", where);
  info.white_level = get_field<double>(meta, "white_level", where);
  if (!(info.black_level >= 0.0 && info.black_level < info.white_level &&
        info.white_level <= 65535.0)) {
    throw FormatError(where + ": field 'black_level'/'white_level' out of range");
  }
  if (info.iso <= 0) throw FormatError(where + ": field 'iso' must be positive");
  header.width = get_field<std::size_t>(meta, "width", where);
  header.height = get_field<std::size_t>(meta, "height", where);

  FrameSidecar& sc = header.sidecar;
  try {
    sc.kind = parse_frame_kind(get_field<std::string>(meta, "kind", where));
  } catch (const FormatError& e) {
    throw FormatError(where + ": field 'kind': " + e.what());
  }
  const auto optional_double = [&](const char* key) -> std::optional<double> {
    if (!meta.contains(key) || meta.at(key).is_null()) return std::nullopt;
    return get_field<double>(meta, key, where);
  };
  sc.exposure_time_s = optional_double("exposure_time_s");
  sc.illumination_level = optional_double("illumination_level");
  sc.low_light_factor = optional_double("low_light_factor");
  if (meta.contains("noise_params") && !meta.at("noise_params").is_null()) {
    sc.noise_params = detail::noise_params_from_json(meta.at("noise_params"), where);
  }
  if (meta.contains("seed")) sc.seed = get_field<std::uint64_t>(meta, "seed", where);
  if (meta.contains("stream_id")) sc.stream_id = get_field<std::uint64_t>(meta, "stream_id", where);
  if (meta.contains("source")) sc.source = get_field<std::string>(meta, "source", where);
  return header;
}

FrameFile read_frame_file(const fs::path& raster) {
  FrameHeader header = read_frame_header(raster);
  SensorInfo& info = header.info;
  FrameSidecar& sc = header.sidecar;

  const std::string bytes = read_file(raster);
  std::size_t pos = 0;
  if (pgm_token(bytes, pos, raster) != "P5") {
    throw FormatError(raster.string() + ": not a binary PGM (P5) raster");
  }
  const std::size_t width = parse_dim(pgm_token(bytes, pos, raster), raster, "width");
  const std::size_t height = parse_dim(pgm_token(bytes, pos, raster), raster, "height");
  const std::size_t maxval = parse_dim(pgm_token(bytes, pos, raster), raster, "maxval");
  if (maxval != 65535) {
    throw FormatError(raster.string() + ": maxval must be 65535, got " + std::to_string(maxval));
  }
  ++pos;  // single whitespace before the pixel data

  const std::size_t side_w = header.width;
  const std::size_t side_h = header.height;
  if (side_w != width || side_h != height) {
    throw FormatError(raster.string() + ": sidecar width/height " + std::to_string(side_w) +
                      "x" + std::to_string(side_h) + " do not match raster " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  const std::size_t count = width * height;
  if (bytes.size() < pos + 2 * count) {
    throw FormatError(raster.string() + ": truncated raster (" +
                      std::to_string(bytes.size() - std::min(bytes.size(), pos)) + " of " +
                      std::to_string(2 * count) + " bytes)");
  }

  const bool signed_kind = sc.kind == FrameFileKind::kBias || sc.kind == FrameFileKind::kFlat;
  std::vector<double> data(count);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned stored = (static_cast<unsigned>(p[2 * i]) << 8) | p[2 * i + 1];
    if (stored > info.white_level) {
      throw FormatError(raster.string() + ": sample " + std::to_string(i) + " value " +
                        std::to_string(stored) + " exceeds white_level");
    }
    const double v = static_cast<double>(stored) - info.black_level;
    data[i] = signed_kind ? v : std::max(v, 0.0);
  }

  try {
    return FrameFile{RawFrame(width, height, std::move(info), std::move(data)), std::move(sc)};
  } catch (const Error& e) {
    throw FormatError(raster.string() + ": " + e.what());
  }
}

RawFrame read_frame(const fs::path& raster) { return read_frame_file(raster).frame; }

void write_frame(const RawFrame& frame, const FrameSidecar& sc, const fs::path& raster) {
  const SensorInfo& info = frame.info();
  if (!(info.black_level >= 0.0 && info.white_level <= 65535.0)) {
    throw FormatError(raster.string() + ": black/white levels do not fit a 16-bit raster");
  }

  std::string bytes = "P5\n" + std::to_string(frame.width()) + " " +
                      std::to_string(frame.height()) + "\n65535\n";
  const std::size_t header = bytes.size();
  bytes.resize(header + 2 * frame.size());
  auto* out = reinterpret_cast<unsigned char*>(bytes.data() + header);
  const auto samples = frame.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double stored =
        std::clamp(std::nearbyint(samples[i] + info.black_level), 0.0, info.white_level);
    const auto v = static_cast<unsigned>(stored);
    out[2 * i] = static_cast<unsigned char>(v >> 8);
    out[2 * i + 1] = static_cast<unsigned char>(v & 0xFF);
  }

  json meta = {
      {"format_version", kFrameFormatVersion},
      {"camera_id", info.camera_id},
      {"iso", info.iso},
      {"bayer_pattern", std::string(to_string(info.bayer_pattern))},
      {"black_level", info.black_level},
      {"white_level", info.white_level},
      {"width", frame.width()},
      {"height", frame.height()},
      {"kind", std::string(to_string(sc.kind))},
  };
  if (sc.exposure_time_s) meta["exposure_time_s"] = *sc.exposure_time_s;
  if (sc.illumination_level) meta["illumination_level"] = *sc.illumination_level;
  if (sc.low_light_factor) meta["low_light_factor"] = *sc.low_light_factor;
  if (sc.noise_params) meta["noise_params"] = detail::to_json(*sc.noise_params);
  if (sc.seed) meta["seed"] = *sc.seed;
  if (sc.stream_id) meta["stream_id"] = *sc.stream_id;
  if (sc.source) meta["source"] = *sc.source;

  write_text_atomic(raster, bytes);
  write_text_atomic(sidecar_path(raster), meta.dump(2) + "\n");
}

}  // namespace sensornoise
