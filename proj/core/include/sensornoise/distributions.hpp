#pragma once

#include <cstdint>
#include <vector>

#include "sensornoise/rng.hpp"

namespace sensornoise {

// Tukey lambda quantile function with zero location and unit scale:
//   Q(p; lambda) = (p^lambda - (1-p)^lambda) / lambda,  Q(p; 0) = log(p/(1-p)).
// Evaluated through expm1 so that it is continuous at lambda = 0.
// Throws DomainError unless 0 < p < 1.
double tukey_lambda_quantile(double p, double lambda);

// Same as above with log(p) and log(1-p) already known (hot loops).
double tukey_lambda_quantile_from_logs(double log_p, double log_q, double lambda) noexcept;

// Variance of the unit-scale Tukey lambda distribution. Finite only for
// lambda > -1/2; returns +inf otherwise. pi^2/3 at lambda = 0.
double tukey_lambda_variance(double lambda);

// Standard normal quantile (Wichura AS241, ~1e-16 relative accuracy).
double normal_quantile(double p);
double normal_cdf(double x) noexcept;
// Upper tail 1 - Phi(x), accurate for large x.
double normal_sf(double x) noexcept;

// log(k!) for k >= 0.
double log_factorial(std::uint64_t k) noexcept;

// Single draws that advance the stream.
double draw_tukey_lambda(double lambda, double sigma, RngStream& rng) noexcept;
double draw_gaussian(double sigma, RngStream& rng) noexcept;
double draw_uniform(double half_width, RngStream& rng) noexcept;
// Exact Poisson variate: multiplication method below mean 10, Hormann's
// transformed rejection (PTRS) above. mean must be finite and >= 0.
std::uint64_t draw_poisson(double mean, RngStream& rng);

// Pure samplers: the stream argument is taken by value so repeated calls with
// the same stream give the same values.
std::vector<double> sample_tukey_lambda(std::size_t n, double lambda, double sigma,
                                        RngStream rng);
std::uint64_t sample_poisson(double mean, RngStream rng);
std::vector<double> sample_gaussian(std::size_t n, double sigma, RngStream rng);
std::vector<double> sample_uniform(std::size_t n, double half_width, RngStream rng);

}  // namespace sensornoise
