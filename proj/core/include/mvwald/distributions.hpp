#pragma once

#include <string>

#include "mvwald/linalg.hpp"
#include "mvwald/rng.hpp"

namespace mvwald {

/// Survival function P(chi^2_df > x) of the central chi-square distribution,
/// via the regularized incomplete gamma function (series / continued-fraction
/// split). Absolute accuracy well below 1e-10.
double chi_square_sf(double x, int df);

/// P(chi^2_df <= x); chi_square_sf + chi_square_cdf = 1.
double chi_square_cdf(double x, int df);

/// Error distributions used to generate simulated data. Every kind is
/// standardized to mean 0, variance 1.
enum class ErrorKind {
  normal,
  double_exponential,
  chi_square_20,
  chi_square_15,
  t_7,
};

struct ErrorDistribution {
  ErrorKind kind = ErrorKind::normal;
};

/// Parses "normal", "laplace" / "double-exponential", "chisq20", "chisq15",
/// "t7" (SpecError otherwise).
ErrorDistribution parse_error_distribution(const std::string& name);
std::string to_string(ErrorKind kind);

/// n i.i.d. draws standardized to mean 0, variance 1:
///   normal as-is; Laplace with scale 1/sqrt(2); (chi2_k - k)/sqrt(2k);
///   t_7 * sqrt(5/7).
Vector draw_standardized(ErrorDistribution dist, Index n, RngStream& rng);

/// mean + cov_sqrt * z with z i.i.d. standard normal. cov_sqrt comes from
/// sym_sqrt; throws ShapeError on length mismatch.
Vector draw_mvn(const Vector& mean, const Matrix& cov_sqrt, RngStream& rng);

/// Fills a matrix with i.i.d. standardized draws, row-major order.
void fill_standardized(ErrorDistribution dist, Matrix& out, RngStream& rng);

} // namespace mvwald
