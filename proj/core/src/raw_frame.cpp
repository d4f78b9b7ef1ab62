#include "sensornoise/raw_frame.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

constexpr std::array<std::pair<BayerPattern, std::string_view>, 4> kPatternNames{{
    {BayerPattern::kRGGB, "RGGB"},
    {BayerPattern::kBGGR, "BGGR"},
    {BayerPattern::kGRBG, "GRBG"},
    {BayerPattern::kGBRG, "GBRG"},
}};

void validate(std::size_t width, std::size_t height, const SensorInfo& info) {
  if (width == 0 || height == 0 || width % 2 != 0 || height % 2 != 0) {
    throw ShapeError("frame dimensions must be positive and even, got " +
                     std::to_string(width) + "x" + std::to_string(height));
  }
  if (!(info.black_level < info.white_level)) {
    throw ConfigError("black_level must be below white_level");
  }
  if (info.iso <= 0) throw ConfigError("iso must be positive");
}

}  // namespace

std::string_view to_string(BayerPattern pattern) noexcept {
  for (const auto& [p, name] : kPatternNames) {
    if (p == pattern) return name;
  }
  return "RGGB";
}

BayerPattern parse_bayer_pattern(std::string_view name) {
  for (const auto& [p, n] : kPatternNames) {
    if (n == name) return p;
  }
  throw FormatError("unknown bayer pattern '" + std::string(name) + "'");
}

RawFrame::RawFrame(std::size_t width, std::size_t height, SensorInfo info, double fill)
    : width_(width), height_(height), info_(std::move(info)) {
  validate(width_, height_, info_);
  data_.assign(width_ * height_, fill);
}

RawFrame::RawFrame(std::size_t width, std::size_t height, SensorInfo info,
                   std::vector<double> data)
    : width_(width), height_(height), info_(std::move(info)), data_(std::move(data)) {
  validate(width_, height_, info_);
  if (data_.size() != width_ * height_) {
    throw ShapeError("frame data has " + std::to_string(data_.size()) +
                     " samples, expected " + std::to_string(width_ * height_));
  }
}

void clip_to_range(RawFrame& frame) noexcept {
  const double hi = frame.info().range();
  for (double& v : frame.samples()) v = std::clamp(v, 0.0, hi);
}

}  // namespace sensornoise
