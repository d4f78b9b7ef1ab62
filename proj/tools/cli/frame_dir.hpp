#pragma once

#include <filesystem>
#include <vector>

#include "sensornoise/frame_io.hpp"

namespace snoise {

struct IndexedFrame {
  std::filesystem::path raster;
  sensornoise::FrameHeader header;
};

// Every "*.pgm" with a sidecar under `dir` (recursively), sorted by path.
// Only the sidecars are read. Throws FormatError if the directory is missing.
std::vector<IndexedFrame> index_frames(const std::filesystem::path& dir);

}  // namespace snoise
