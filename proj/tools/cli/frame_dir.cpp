#include "cli/frame_dir.hpp"

#include <algorithm>

#include "sensornoise/errors.hpp"

namespace snoise {

namespace fs = std::filesystem;

std::vector<IndexedFrame> index_frames(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw sensornoise::FormatError(dir.string() + ": not a directory");
  }
  std::vector<fs::path> rasters;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      rasters.push_back(entry.path());
    }
  }
  std::sort(rasters.begin(), rasters.end(),
            [](const fs::path& a, const fs::path& b) { return a < b; });
  std::vector<IndexedFrame> out;
  out.reserve(rasters.size());
  for (auto& r : rasters) {
    auto header = sensornoise::read_frame_header(r);
    out.push_back({std::move(r), std::move(header)});
  }
  return out;
}

}  // namespace snoise
