#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sensornoise {

enum class NoiseComponent : std::uint8_t { kShot = 0, kRead = 1, kRow = 2, kQuant = 3 };

class ComponentSet {
 public:
  constexpr ComponentSet() = default;

  static constexpr ComponentSet all() noexcept { return ComponentSet(0b1111); }
  static constexpr ComponentSet none() noexcept { return ComponentSet(0); }
  static constexpr ComponentSet only(NoiseComponent c) noexcept {
    return ComponentSet(bit(c));
  }

  constexpr bool contains(NoiseComponent c) const noexcept { return (bits_ & bit(c)) != 0; }
  constexpr ComponentSet with(NoiseComponent c) const noexcept {
    return ComponentSet(bits_ | bit(c));
  }
  constexpr ComponentSet without(NoiseComponent c) const noexcept {
    return ComponentSet(bits_ & ~bit(c));
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  // Comma-separated names, e.g. "shot,read,row,quant".
  std::string to_string() const;
  // Parses a comma-separated list of component names. Throws ConfigError.
  static ComponentSet parse(std::string_view list);

  constexpr bool operator==(const ComponentSet&) const = default;

 private:
  constexpr explicit ComponentSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(NoiseComponent c) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }

  std::uint8_t bits_ = 0b1111;
};

std::string_view to_string(NoiseComponent c) noexcept;

// One concrete draw of the noise model parameters.
//   k        system gain, DN per electron
//   lambda   Tukey lambda shape of the read noise
//   sigma_tl read-noise scale, DN
//   sigma_r  row-noise standard deviation, DN
//   q        quantization step, DN
struct NoiseParams {
  double k = 1.0;
  double lambda = 0.14;
  double sigma_tl = 0.0;
  double sigma_r = 0.0;
  double q = 1.0;
  ComponentSet enabled = ComponentSet::all();

  // Throws DomainError when an invariant is violated.
  void validate() const;

  bool operator==(const NoiseParams&) const = default;
};

}  // namespace sensornoise
