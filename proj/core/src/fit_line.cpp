#include "sensornoise/fit_line.hpp"

#include <cmath>
#include <string>

#include "sensornoise/errors.hpp"

namespace sensornoise {

FitLine fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ShapeError("fit_line: x and y differ in length");
  const std::size_t n = x.size();
  if (n < 2) {
    throw InsufficientDataError("fit_line needs at least 2 points, got " + std::to_string(n));
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    sxx += dx * dx;
    sxy += dx * (y[i] - my);
  }
  if (sxx <= 0.0) throw DegenerateDataError("fit_line: all x values are equal");

  FitLine line;
  line.n_points = n;
  line.slope = sxy / sxx;
  line.intercept = my - line.slope * mx;
  if (n > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - line(x[i]);
      rss += r * r;
    }
    line.resid_std = std::sqrt(rss / static_cast<double>(n - 2));
  }
  return line;
}

}  // namespace sensornoise
