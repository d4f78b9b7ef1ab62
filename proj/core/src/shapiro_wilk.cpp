#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sampling.hpp"
#include "sensornoise/calibration.hpp"
#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

// Polynomial with c[0] as the constant term.
template <std::size_t N>
double poly(const std::array<double, N>& c, double x) noexcept {
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Royston's approximation constants (Applied Statistics 44(4), 1995).
constexpr std::array<double, 6> kC1{0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr std::array<double, 6> kC2{0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr std::array<double, 4> kC3{0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr std::array<double, 4> kC4{1.3822, -0.77857, 0.062767, -0.0020322};
constexpr std::array<double, 4> kC5{-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr std::array<double, 3> kC6{-0.4803, -0.082676, 0.0030302};
constexpr std::array<double, 2> kG{-2.273, 0.459};
constexpr double kSmall = 1e-19;

std::vector<double> subsample(std::span<const double> samples, std::size_t k, RngStream rng) {
  std::vector<double> out;
  out.reserve(k);
  for (std::size_t i : detail::choose_indices(samples.size(), k, rng)) out.push_back(samples[i]);
  return out;
}

// Upper-half coefficients a_1..a_{n/2} (positive, a_1 pairs with the extremes).
std::vector<double> coefficients(std::size_t n) {
  const std::size_t half = n / 2;
  std::vector<double> a(half);
  if (n == 3) {
    a[0] = std::numbers::sqrt2 / 2.0;
    return a;
  }
  const double an = static_cast<double>(n);
  double summ2 = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    a[i] = -normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
    summ2 += a[i] * a[i];
  }
  summ2 *= 2.0;
  const double ssumm2 = std::sqrt(summ2);
  const double rsn = 1.0 / std::sqrt(an);
  const double a1 = poly(kC1, rsn) + a[0] / ssumm2;

  std::size_t first_scaled;
  double fac;
  if (n > 5) {
    const double a2 = poly(kC2, rsn) + a[1] / ssumm2;
    fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                    (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
    a[0] = a1;
    a[1] = a2;
    first_scaled = 2;
  } else {
    fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
    a[0] = a1;
    first_scaled = 1;
  }
  for (std::size_t i = first_scaled; i < half; ++i) a[i] /= fac;
  return a;
}

double p_value(double w, std::size_t n) {
  if (n == 3) {
    const double p = 6.0 / std::numbers::pi * (std::asin(std::sqrt(w)) - std::numbers::pi / 3.0);
    return std::clamp(p, 0.0, 1.0);
  }
  const double w1 = 1.0 - w;
  if (w1 <= 0.0) return 1.0;
  double y = std::log(w1);
  const double an = static_cast<double>(n);
  double m, s;
  if (n <= 11) {
    const double gamma = poly(kG, an);
    if (y >= gamma) return kSmall;
    y = -std::log(gamma - y);
    m = poly(kC3, an);
    s = std::exp(poly(kC4, an));
  } else {
    const double xx = std::log(an);
    m = poly(kC5, xx);
    s = std::exp(poly(kC6, xx));
  }
  return normal_sf((y - m) / s);
}

}  // namespace

ShapiroWilkResult shapiro_wilk(std::span<const double> samples, std::size_t max_n,
                               RngStream rng) {
  if (samples.size() < 3) {
    throw InsufficientDataError("shapiro_wilk needs n >= 3, got " +
                                std::to_string(samples.size()));
  }
  max_n = std::clamp<std::size_t>(max_n, 3, 5000);
  std::vector<double> x = samples.size() > max_n
                              ? subsample(samples, max_n, rng)
                              : std::vector<double>(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  const double range = x.back() - x.front();
  if (!(range >= kSmall)) throw DegenerateDataError("shapiro_wilk: samples have zero range");

  const std::vector<double> a = coefficients(n);

  // W as the squared correlation between the data and the antisymmetric
  // coefficient vector; 1 - W is formed as a product to keep precision near 1.
  double mean_x = 0.0;
  for (double& v : x) {
    v /= range;
    mean_x += v;
  }
  mean_x /= static_cast<double>(n);
  double ssa = 0.0, ssx = 0.0, sax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mirror = n - 1 - i;
    double ai = 0.0;
    if (i < mirror) ai = -a[i];
    else if (i > mirror) ai = a[mirror];
    const double dx = x[i] - mean_x;
    ssa += ai * ai;
    ssx += dx * dx;
    sax += ai * dx;
  }
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);

  ShapiroWilkResult result;
  result.n = n;
  result.w = 1.0 - w1;
  result.p = p_value(result.w, n);
  return result;
}

}  // namespace sensornoise
