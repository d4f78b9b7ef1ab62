#include "sensornoise/noise_params.hpp"

#include <array>
#include <cmath>
#include <string>

#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

constexpr std::array<NoiseComponent, 4> kComponents{
    NoiseComponent::kShot, NoiseComponent::kRead, NoiseComponent::kRow,
    NoiseComponent::kQuant};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(NoiseComponent c) noexcept {
  switch (c) {
    case NoiseComponent::kShot: return "shot";
    case NoiseComponent::kRead: return "read";
    case NoiseComponent::kRow: return "row";
    case NoiseComponent::kQuant: return "quant";
  }
  return "?";
}

std::string ComponentSet::to_string() const {
  std::string out;
  for (auto c : kComponents) {
    if (!contains(c)) continue;
    if (!out.empty()) out += ',';
    out += sensornoise::to_string(c);
  }
  return out;
}

ComponentSet ComponentSet::parse(std::string_view list) {
  ComponentSet set = none();
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view token = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (token.empty()) continue;
    bool known = false;
    for (auto c : kComponents) {
      if (token == sensornoise::to_string(c)) {
        set = set.with(c);
        known = true;
      }
    }
    if (!known) throw ConfigError("unknown noise component '" + std::string(token) + "'");
  }
  return set;
}

void NoiseParams::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("K must be finite and > 0");
  if (!(lambda >= -1.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [-1, 1]");
  if (!(sigma_tl >= 0.0) || !std::isfinite(sigma_tl)) {
    throw DomainError("sigma_tl must be finite and >= 0");
  }
  if (!(sigma_r >= 0.0) || !std::isfinite(sigma_r)) {
    throw DomainError("sigma_r must be finite and >= 0");
  }
  if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("q must be finite and >= 0");
}

}  // namespace sensornoise
