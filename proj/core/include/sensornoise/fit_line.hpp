#pragma once

#include <cstddef>
#include <span>

namespace sensornoise {

// Ordinary least-squares line y = slope * x + intercept.
// resid_std is the unbiased residual standard deviation sqrt(RSS / (n - 2)),
// reported as 0 when n == 2.
struct FitLine {
  double slope = 0.0;
  double intercept = 0.0;
  double resid_std = 0.0;
  std::size_t n_points = 0;

  double operator()(double x) const noexcept { return slope * x + intercept; }
  bool operator==(const FitLine&) const = default;
};

// Throws InsufficientDataError for fewer than two points and
// DegenerateDataError when all x are equal.
FitLine fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace sensornoise
