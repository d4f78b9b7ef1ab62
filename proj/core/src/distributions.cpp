#include "sensornoise/distributions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

void require_scale(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(value));
  }
}

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) noexcept {
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Stirling series for log Gamma(x), x >= 10.
double log_gamma_stirling(double x) noexcept {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

std::uint64_t poisson_multiplication(double mean, RngStream& rng) noexcept {
  const double threshold = std::exp(-mean);
  std::uint64_t k = 0;
  double product = rng.next_uniform();
  while (product > threshold) {
    ++k;
    product *= rng.next_uniform();
  }
  return k;
}

// W. Hormann, "The transformed rejection method for generating Poisson random
// variables", Insurance: Mathematics and Economics 12 (1993). Valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, RngStream& rng) noexcept {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double log_inv_alpha = std::log(1.1239 + 1.1328 / (b - 3.4));
  const double vr = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.next_uniform() - 0.5;
    const double v = rng.next_uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const auto ki = static_cast<std::uint64_t>(k);
    if (std::log(v) + log_inv_alpha - std::log(a / (us * us) + b) <=
        -mean + k * loglam - log_factorial(ki)) {
      return ki;
    }
  }
}

}  // namespace

double tukey_lambda_quantile_from_logs(double log_p, double log_q, double lambda) noexcept {
  if (lambda == 0.0) return log_p - log_q;
  return (std::expm1(lambda * log_p) - std::expm1(lambda * log_q)) / lambda;
}

double tukey_lambda_quantile(double p, double lambda) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("tukey_lambda_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  return tukey_lambda_quantile_from_logs(std::log(p), std::log1p(-p), lambda);
}

double tukey_lambda_variance(double lambda) {
  if (lambda <= -0.5) return std::numeric_limits<double>::infinity();
  if (std::fabs(lambda) < 1e-5) return std::numbers::pi * std::numbers::pi / 3.0;
  const double g1 = std::tgamma(lambda + 1.0);
  return 2.0 / (lambda * lambda) *
         (1.0 / (1.0 + 2.0 * lambda) - g1 * g1 / std::tgamma(2.0 * lambda + 2.0));
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal_quantile: p must lie in (0, 1), got " + std::to_string(p));
  }
  static constexpr std::array<double, 8> a{
      3.3871328727963666080e0,  1.3314166789178437745e+2, 1.9715909503065514427e+3,
      1.3731693765509461125e+4, 4.5921953931549871457e+4, 6.7265770927008700853e+4,
      3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static constexpr std::array<double, 8> b{
      1.0,                      4.2313330701600911252e+1, 6.8718700749205790830e+2,
      5.3941960214247511077e+3, 2.1213794301586595867e+4, 3.9307895800092710610e+4,
      2.8729085735721942674e+4, 5.2264952788528545610e+3};
  static constexpr std::array<double, 8> c{
      1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
      3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr std::array<double, 8> d{
      1.0,                      2.05319162663775882187e0, 1.67638483018380384940e0,
      6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static constexpr std::array<double, 8> e{
      6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
      2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr std::array<double, 8> f{
      1.0,                      5.99832206555887937690e-1, 1.36929880922735805310e-1,
      1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(a, r) / horner(b, r);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(c, r) / horner(d, r);
  } else {
    r -= 5.0;
    value = horner(e, r) / horner(f, r);
  }
  return q < 0.0 ? -value : value;
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_sf(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_factorial(std::uint64_t k) noexcept {
  static const auto table = [] {
    std::array<double, 64> t{};
    double acc = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      acc += std::log(static_cast<double>(i));
      t[i] = acc;
    }
    return t;
  }();
  if (k < table.size()) return table[k];
  return log_gamma_stirling(static_cast<double>(k) + 1.0);
}

double draw_tukey_lambda(double lambda, double sigma, RngStream& rng) noexcept {
  const double u = rng.next_uniform();
  return sigma * tukey_lambda_quantile_from_logs(std::log(u), std::log1p(-u), lambda);
}

double draw_gaussian(double sigma, RngStream& rng) noexcept {
  return sigma * normal_quantile(rng.next_uniform());
}

double draw_uniform(double half_width, RngStream& rng) noexcept {
  return half_width * (2.0 * rng.next_uniform() - 1.0);
}

std::uint64_t draw_poisson(double mean, RngStream& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson mean must be finite and >= 0, got " + std::to_string(mean));
  }
  if (mean == 0.0) return 0;
  return mean < 10.0 ? poisson_multiplication(mean, rng) : poisson_ptrs(mean, rng);
}

std::vector<double> sample_tukey_lambda(std::size_t n, double lambda, double sigma,
                                        RngStream rng) {
  require_scale(sigma, "sigma");
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  std::vector<double> out(n);
  for (auto& v : out) v = draw_tukey_lambda(lambda, sigma, rng);
  return out;
}

std::uint64_t sample_poisson(double mean, RngStream rng) { return draw_poisson(mean, rng); }

std::vector<double> sample_gaussian(std::size_t n, double sigma, RngStream rng) {
  require_scale(sigma, "sigma");
  std::vector<double> out(n);
  for (auto& v : out) v = draw_gaussian(sigma, rng);
  return out;
}

std::vector<double> sample_uniform(std::size_t n, double half_width, RngStream rng) {
  require_scale(half_width, "half_width");
  std::vector<double> out(n);
  for (auto& v : out) v = draw_uniform(half_width, rng);
  return out;
}

}  // namespace sensornoise
