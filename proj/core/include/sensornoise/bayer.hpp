#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "sensornoise/raw_frame.hpp"

namespace sensornoise {

struct Plane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> data;

  double at(std::size_t r, std::size_t c) const noexcept { return data[r * width + c]; }
  bool operator==(const Plane&) const = default;
};

// Four half-resolution planes in quad raster order: (0,0), (0,1), (1,0), (1,1).
// For RGGB that is R, G1, G2, B.
struct BayerPlanes {
  BayerPattern pattern = BayerPattern::kRGGB;
  std::array<Plane, 4> planes;
};

// Color letter ('R', 'G' or 'B') of quad position 0..3 for a pattern.
char plane_color(BayerPattern pattern, std::size_t plane_index) noexcept;

BayerPlanes pack_bayer(const RawFrame& frame);
// Inverse of pack_bayer; `info` supplies metadata for the rebuilt frame.
RawFrame unpack_bayer(const BayerPlanes& planes, const SensorInfo& info);

}  // namespace sensornoise
