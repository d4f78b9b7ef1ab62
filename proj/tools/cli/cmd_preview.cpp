#include <algorithm>
#include <cmath>
#include <string>

#include "cli/commands.hpp"
#include "sensornoise/bayer.hpp"
#include "sensornoise/frame_io.hpp"

namespace snoise {

using namespace sensornoise;

// Half-resolution RGB: one pixel per Bayer quad, the two greens averaged,
// then a single global scale so the brightest channel value maps to 255.
// Linear and non-colorimetric; meant for eyeballing only.
void cmd_preview(const PreviewArgs& args, std::ostream& out) {
  const RawFrame frame = read_frame(args.in);
  const BayerPlanes packed = pack_bayer(frame);
  const std::size_t w = packed.planes[0].width;
  const std::size_t h = packed.planes[0].height;

  std::vector<double> rgb(3 * w * h, 0.0);
  for (std::size_t p = 0; p < 4; ++p) {
    const char color = plane_color(packed.pattern, p);
    const std::size_t channel = color == 'R' ? 0 : color == 'G' ? 1 : 2;
    const double weight = channel == 1 ? 0.5 : 1.0;
    for (std::size_t i = 0; i < w * h; ++i) {
      rgb[3 * i + channel] += weight * std::max(0.0, packed.planes[p].data[i]);
    }
  }
  const double peak = *std::max_element(rgb.begin(), rgb.end());
  const double scale = peak > 0.0 ? 255.0 / peak : 0.0;

  std::string bytes = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  bytes.reserve(bytes.size() + rgb.size());
  for (double v : rgb) {
    bytes.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(v * scale))));
  }
  write_text_atomic(args.out, bytes);
  out << args.out.string() << "\n";
}

}  // namespace snoise
