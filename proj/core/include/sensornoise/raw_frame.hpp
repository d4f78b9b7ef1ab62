#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sensornoise {

enum class BayerPattern { kRGGB, kBGGR, kGRBG, kGBRG };

std::string_view to_string(BayerPattern pattern) noexcept;
// Throws FormatError on an unknown name.
BayerPattern parse_bayer_pattern(std::string_view name);

struct SensorInfo {
  BayerPattern bayer_pattern = BayerPattern::kRGGB;
  double black_level = 0.0;
  double white_level = 65535.0;
  int iso = 100;
  std::string camera_id;

  // Usable signal range after black-level subtraction.
  double range() const noexcept { return white_level - black_level; }

  bool operator==(const SensorInfo&) const = default;
};

// Single-channel raw mosaic, row-major, stored black-level-subtracted.
// Width and height are always even so the frame holds whole Bayer quads.
class RawFrame {
 public:
  // Throws ShapeError for odd or zero dimensions and ConfigError when
  // black_level >= white_level.
  RawFrame(std::size_t width, std::size_t height, SensorInfo info, double fill = 0.0);
  RawFrame(std::size_t width, std::size_t height, SensorInfo info, std::vector<double> data);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  const SensorInfo& info() const noexcept { return info_; }
  SensorInfo& info() noexcept { return info_; }

  double& at(std::size_t row, std::size_t col) noexcept { return data_[row * width_ + col]; }
  double at(std::size_t row, std::size_t col) const noexcept {
    return data_[row * width_ + col];
  }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * width_, width_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * width_, width_};
  }

  std::span<double> samples() noexcept { return data_; }
  std::span<const double> samples() const noexcept { return data_; }

  bool same_geometry(const RawFrame& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const RawFrame&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  SensorInfo info_;
  std::vector<double> data_;
};

// Clamp every sample into [0, info.range()].
void clip_to_range(RawFrame& frame) noexcept;

}  // namespace sensornoise
