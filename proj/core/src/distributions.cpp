#include "mvwald/distributions.hpp"

#include <cmath>
#include <limits>

namespace mvwald {

namespace {

// Regularized lower incomplete gamma P(a,x) by series expansion (x < a+1).
double gamma_p_series(double a, double x) {
  const double lg = std::lgamma(a);
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lg);
}

// Regularized upper incomplete gamma Q(a,x) by Lentz continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
  const double lg = std::lgamma(a);
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - lg);
}

// Q(a,x) = 1 - P(a,x), branch chosen for fast convergence.
double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

} // namespace

double chi_square_sf(double x, int df) {
  if (df < 1)
    throw SpecError("chi_square_sf: df must be >= 1");
  if (!(x >= 0.0))
    throw SpecError("chi_square_sf: x must be >= 0");
  return gamma_q(0.5 * static_cast<double>(df), 0.5 * x);
}

double chi_square_cdf(double x, int df) {
  if (df < 1)
    throw SpecError("chi_square_cdf: df must be >= 1");
  if (!(x >= 0.0))
    throw SpecError("chi_square_cdf: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double a = 0.5 * static_cast<double>(df);
  const double half = 0.5 * x;
  if (half < a + 1.0) return gamma_p_series(a, half);
  return 1.0 - gamma_q_cf(a, half);
}

ErrorDistribution parse_error_distribution(const std::string& name) {
  if (name == "normal") return {ErrorKind::normal};
  if (name == "laplace" || name == "double-exponential") return {ErrorKind::double_exponential};
  if (name == "chisq20") return {ErrorKind::chi_square_20};
  if (name == "chisq15") return {ErrorKind::chi_square_15};
  if (name == "t7") return {ErrorKind::t_7};
  throw SpecError("unknown error distribution '" + name +
                  "' (expected normal|laplace|chisq20|chisq15|t7)");
}

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::normal: return "normal";
    case ErrorKind::double_exponential: return "laplace";
    case ErrorKind::chi_square_20: return "chisq20";
    case ErrorKind::chi_square_15: return "chisq15";
    case ErrorKind::t_7: return "t7";
  }
  return "?";
}

namespace {

template <typename Fn>
void generate_draws(ErrorDistribution dist, RngStream& rng, Index count, Fn&& sink) {
  auto& eng = rng.engine();
  switch (dist.kind) {
    case ErrorKind::normal: {
      std::normal_distribution<double> normal;
      for (Index i = 0; i < count; ++i) sink(normal(eng));
      break;
    }
    case ErrorKind::double_exponential: {
      // Laplace(0, 1/sqrt(2)): variance 2*b^2 = 1.
      const double b = 1.0 / std::sqrt(2.0);
      for (Index i = 0; i < count; ++i) {
        const double u = rng.uniform() - 0.5;
        const double mag = std::log1p(-2.0 * std::abs(u)); // log(1 - 2|u|) <= 0
        sink(u < 0.0 ? b * mag : -b * mag);
      }
      break;
    }
    case ErrorKind::chi_square_20:
    case ErrorKind::chi_square_15: {
      const double k = dist.kind == ErrorKind::chi_square_20 ? 20.0 : 15.0;
      const double scale = 1.0 / std::sqrt(2.0 * k);
      std::chi_squared_distribution<double> chi(k);
      for (Index i = 0; i < count; ++i) sink((chi(eng) - k) * scale);
      break;
    }
    case ErrorKind::t_7: {
      const double scale = std::sqrt(5.0 / 7.0); // Var(t_7) = 7/5
      std::student_t_distribution<double> t(7.0);
      for (Index i = 0; i < count; ++i) sink(t(eng) * scale);
      break;
    }
  }
}

} // namespace

Vector draw_standardized(ErrorDistribution dist, Index n, RngStream& rng) {
  if (n < 1)
    throw SpecError("draw_standardized: n must be >= 1");
  Vector out(n);
  Index at = 0;
  generate_draws(dist, rng, n, [&](double v) { out(at++) = v; });
  return out;
}

void fill_standardized(ErrorDistribution dist, Matrix& out, RngStream& rng) {
  Index row = 0, col = 0;
  generate_draws(dist, rng, out.size(), [&](double v) {
    out(row, col) = v;
    if (++col == out.cols()) {
      col = 0;
      ++row;
    }
  });
}

Vector draw_mvn(const Vector& mean, const Matrix& cov_sqrt, RngStream& rng) {
  if (mean.size() != cov_sqrt.rows())
    throw ShapeError("draw_mvn: mean length " + std::to_string(mean.size()) +
                     " does not match cov_sqrt rows " + std::to_string(cov_sqrt.rows()));
  Vector z = draw_standardized({ErrorKind::normal}, cov_sqrt.cols(), rng);
  return mean + cov_sqrt * z;
}

} // namespace mvwald
