#pragma once

#include <array>
#include <cstdint>

namespace sensornoise {

// Counter-based random stream (Philox4x32-10).
//
// The value of draw i is a pure function of (seed, stream_id, i), so a stream
// can be split into substreams and consumed from any thread without changing
// results. A stream object only carries its read position; copying it forks
// an identical sequence.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t position() const noexcept { return position_; }

  // Independent child stream, positioned at draw 0. Children of distinct
  // indices (and of distinct parents) get distinct stream ids.
  RngStream substream(std::uint64_t index) const noexcept;

  void seek(std::uint64_t draw_index) noexcept { position_ = draw_index; }

  std::uint64_t next_u64() noexcept;

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0. Exactly uniform (Lemire's
  // multiply-shift with rejection).
  std::uint64_t next_below(std::uint64_t bound) noexcept;

  // Raw block function: four 32-bit words for a 128-bit counter.
  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> counter,
                                             std::array<std::uint32_t, 2> key) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t position_ = 0;

  // Each Philox block yields two 64-bit draws; keep the last block around.
  std::uint64_t cached_block_ = ~std::uint64_t{0};
  std::array<std::uint64_t, 2> cached_words_{};
};

// SplitMix64 finalizer; used to derive stream ids.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace sensornoise
