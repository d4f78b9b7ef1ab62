#include <algorithm>
#include <cmath>
#include <string>

#include "sensornoise/calibration.hpp"
#include "sensornoise/distributions.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

namespace {

// Gaussian-like member of the Tukey lambda family; PPCC ties go toward it.
constexpr double kGaussianLikeLambda = 0.14;

std::vector<double> sorted_copy(std::span<const double> samples) {
  std::vector<double> y(samples.begin(), samples.end());
  std::sort(y.begin(), y.end());
  return y;
}

}  // namespace

std::vector<double> filliben_positions(std::size_t n) {
  std::vector<double> m(n);
  if (n == 0) return m;
  if (n == 1) {
    m[0] = 0.5;
    return m;
  }
  const double dn = static_cast<double>(n);
  const double last = std::pow(0.5, 1.0 / dn);
  m[n - 1] = last;
  m[0] = 1.0 - last;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    m[i] = (static_cast<double>(i + 1) - 0.3175) / (dn + 0.365);
  }
  return m;
}

ProbabilityPlotFit probability_plot(std::span<const double> samples, const QuantileFn& quantile) {
  const std::size_t n = samples.size();
  if (n < 3) {
    throw InsufficientDataError("probability_plot needs n >= 3, got " + std::to_string(n));
  }
  const std::vector<double> y = sorted_copy(samples);
  const std::vector<double> m = filliben_positions(n);

  std::vector<double> x(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = quantile(m[i]);
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(syy > 0.0)) throw DegenerateDataError("probability_plot: samples have zero variance");
  if (!(sxx > 0.0)) throw DegenerateDataError("probability_plot: quantile function is constant");

  ProbabilityPlotFit fit;
  fit.scale = sxy / sxx;
  fit.offset = my - fit.scale * mx;
  fit.r2 = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

std::vector<double> PpccGrid::values() const {
  if (!(step > 0.0) || !(lo <= hi)) throw ConfigError("invalid PPCC grid");
  // Integer stepping avoids drift; values are rounded to the step.
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = std::round((lo + static_cast<double>(i) * step) / step) * step;
  }
  return v;
}

PpccResult ppcc_fit(std::span<const double> samples, const PpccGrid& grid) {
  const std::size_t n = samples.size();
  if (n < 10) throw InsufficientDataError("ppcc_fit needs n >= 10, got " + std::to_string(n));

  const std::vector<double> y = sorted_copy(samples);
  const std::vector<double> m = filliben_positions(n);

  double my = 0.0;
  for (double v : y) my += v;
  my /= static_cast<double>(n);
  double syy = 0.0;
  for (double v : y) syy += (v - my) * (v - my);
  if (!(syy > 0.0)) throw DegenerateDataError("ppcc_fit: samples have zero variance");

  // The plotting positions are symmetric about 1/2, so the theoretical
  // quantiles are odd: x[n-1-i] = -x[i], their mean is zero, and only the
  // lower half needs evaluating. The middle point of an odd n is Q(1/2) = 0.
  const std::size_t half = n / 2;
  std::vector<double> log_p(half), log_q(half), dy(half);
  for (std::size_t i = 0; i < half; ++i) {
    log_p[i] = std::log(m[i]);
    log_q[i] = std::log1p(-m[i]);
    dy[i] = y[i] - y[n - 1 - i];
  }

  PpccResult result;
  result.correlation = -2.0;
  for (double lambda : grid.values()) {
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      const double x = tukey_lambda_quantile_from_logs(log_p[i], log_q[i], lambda);
      sxx += x * x;
      sxy += x * dy[i];
    }
    sxx *= 2.0;
    const double r = sxx > 0.0 ? std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0) : 0.0;
    result.curve.push_back({lambda, r});

    const bool better = r > result.correlation;
    const bool tie_closer =
        r == result.correlation && std::fabs(lambda - kGaussianLikeLambda) <
                                       std::fabs(result.lambda - kGaussianLikeLambda);
    if (better || tie_closer) {
      result.correlation = r;
      result.lambda = lambda;
    }
  }
  return result;
}

}  // namespace sensornoise
