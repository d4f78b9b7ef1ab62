#include "sensornoise/bayer.hpp"

#include "sensornoise/errors.hpp"

namespace sensornoise {

char plane_color(BayerPattern pattern, std::size_t plane_index) noexcept {
  const std::string_view name = to_string(pattern);
  return plane_index < name.size() ? name[plane_index] : '?';
}

BayerPlanes pack_bayer(const RawFrame& frame) {
  // RawFrame already guarantees even dimensions.
  const std::size_t pw = frame.width() / 2;
  const std::size_t ph = frame.height() / 2;
  BayerPlanes out;
  out.pattern = frame.info().bayer_pattern;
  for (auto& plane : out.planes) {
    plane.width = pw;
    plane.height = ph;
    plane.data.resize(pw * ph);
  }
  for (std::size_t r = 0; r < ph; ++r) {
    for (std::size_t c = 0; c < pw; ++c) {
      const std::size_t i = r * pw + c;
      out.planes[0].data[i] = frame.at(2 * r, 2 * c);
      out.planes[1].data[i] = frame.at(2 * r, 2 * c + 1);
      out.planes[2].data[i] = frame.at(2 * r + 1, 2 * c);
      out.planes[3].data[i] = frame.at(2 * r + 1, 2 * c + 1);
    }
  }
  return out;
}

RawFrame unpack_bayer(const BayerPlanes& packed, const SensorInfo& info) {
  const std::size_t pw = packed.planes[0].width;
  const std::size_t ph = packed.planes[0].height;
  for (const auto& plane : packed.planes) {
    if (plane.width != pw || plane.height != ph || plane.data.size() != pw * ph) {
      throw ShapeError("bayer planes have inconsistent shapes");
    }
  }
  SensorInfo meta = info;
  meta.bayer_pattern = packed.pattern;
  RawFrame frame(2 * pw, 2 * ph, std::move(meta));
  for (std::size_t r = 0; r < ph; ++r) {
    for (std::size_t c = 0; c < pw; ++c) {
      const std::size_t i = r * pw + c;
      frame.at(2 * r, 2 * c) = packed.planes[0].data[i];
      frame.at(2 * r, 2 * c + 1) = packed.planes[1].data[i];
      frame.at(2 * r + 1, 2 * c) = packed.planes[2].data[i];
      frame.at(2 * r + 1, 2 * c + 1) = packed.planes[3].data[i];
    }
  }
  return frame;
}

}  // namespace sensornoise
