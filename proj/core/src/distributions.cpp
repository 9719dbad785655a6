#include "fatigue/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fatigue/error.hpp"

namespace fatigue {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)
constexpr double kSqrt2 = 1.41421356237309504880;

void require_sigma(double sigma) {
  if (!(sigma > 0.0)) throw ParamError("scale parameter must be > 0");
}

// log(1 - exp(u)) for u <= 0 without cancellation.
double log1mexp(double u) {
  if (u >= 0.0) return u == 0.0 ? -kInf : std::numeric_limits<double>::quiet_NaN();
  if (u > -0.6931471805599453) return std::log(-std::expm1(u));
  return std::log1p(-std::exp(u));
}

}  // namespace

// --------------------------------------------------------------------------
// Normal
// --------------------------------------------------------------------------

Normal::Normal(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  require_sigma(sigma);
}

double normal_logpdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma) - kLogSqrt2Pi;
}

double normal_pdf(double x, double mu, double sigma) {
  return std::exp(normal_logpdf(x, mu, sigma));
}

double normal_cdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return 0.5 * std::erfc(-z / kSqrt2);
}

double normal_sf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return 0.5 * std::erfc(z / kSqrt2);
}

namespace {

// log of the standard normal survival function. erfc underflows near z = 38;
// past z = 30 the asymptotic expansion is accurate to ~1e-12 relative.
double std_normal_logsf(double z) {
  if (z < 30.0) {
    return std::log(0.5 * std::erfc(z / kSqrt2));
  }
  const double z2 = z * z;
  const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
  return -0.5 * z2 - std::log(z) - kLogSqrt2Pi + std::log(series);
}

}  // namespace

double normal_logsf(double x, double mu, double sigma) {
  require_sigma(sigma);
  return std_normal_logsf((x - mu) / sigma);
}

double normal_logcdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  return std_normal_logsf(-(x - mu) / sigma);
}

namespace {

// Acklam's rational approximation to the standard normal inverse CDF
// (relative error < 1.15e-9), then one Newton step against erfc-based cdf.
double std_normal_quantile(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Newton refinement: x -= (Phi(x) - p) / phi(x).
  const double err = 0.5 * std::erfc(-x / kSqrt2) - p;
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
  if (pdf > 0.0) x -= err / pdf;
  return x;
}

}  // namespace

double normal_quantile(double p, double mu, double sigma) {
  require_sigma(sigma);
  if (!(p > 0.0 && p < 1.0)) throw ParamError("quantile probability must lie in (0, 1)");
  return mu + sigma * std_normal_quantile(p);
}

// --------------------------------------------------------------------------
// Smallest extreme value
// --------------------------------------------------------------------------

Sev::Sev(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  require_sigma(sigma);
}

double sev_logpdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return z - std::exp(z) - std::log(sigma);
}

double sev_pdf(double x, double mu, double sigma) {
  return std::exp(sev_logpdf(x, mu, sigma));
}

double sev_cdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return -std::expm1(-std::exp(z));
}

double sev_sf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return std::exp(-std::exp(z));
}

double sev_logsf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return -std::exp(z);
}

double sev_logcdf(double x, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (x - mu) / sigma;
  return log1mexp(-std::exp(z));
}

double sev_quantile(double p, double mu, double sigma) {
  require_sigma(sigma);
  if (!(p > 0.0 && p < 1.0)) throw ParamError("quantile probability must lie in (0, 1)");
  return mu + sigma * std::log(-std::log1p(-p));
}

// --------------------------------------------------------------------------
// Inverse gamma
// --------------------------------------------------------------------------

InverseGamma::InverseGamma(double shape_, double scale_) : shape(shape_), scale(scale_) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw ParamError("inverse-gamma parameters must be > 0");
}

double invgamma_logpdf(double x, double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw ParamError("inverse-gamma parameters must be > 0");
  if (!(x > 0.0)) return -kInf;
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) -
         scale / x;
}

// --------------------------------------------------------------------------
// Uniform
// --------------------------------------------------------------------------

UniformInterval::UniformInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo < hi)) throw ParamError("uniform interval requires lo < hi");
}

double uniform_logpdf(double x, double lo, double hi) {
  if (!(lo < hi)) throw ParamError("uniform interval requires lo < hi");
  if (x < lo || x > hi) return -kInf;
  return -std::log(hi - lo);
}

// --------------------------------------------------------------------------
// Kernel density estimation
// --------------------------------------------------------------------------

double sample_quantile(std::span<const double> values, double p) {
  if (values.empty()) throw DataError("sample_quantile: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double kde_bandwidth(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw DataError("kde: need at least two samples");
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) throw DataError("kde: degenerate sample (zero spread)");
  const double iqr = sample_quantile(samples, 0.75) - sample_quantile(samples, 0.25);
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  return 1.06 * spread * std::pow(static_cast<double>(n), -0.2);
}

std::vector<double> kde_density(std::span<const double> samples,
                                std::span<const double> grid, double bandwidth) {
  if (!(bandwidth > 0.0)) throw ParamError("kde: bandwidth must be > 0");
  std::vector<double> density(grid.size(), 0.0);
  const double norm =
      1.0 / (static_cast<double>(samples.size()) * bandwidth * std::sqrt(2.0 * M_PI));
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double acc = 0.0;
    for (double x : samples) {
      const double z = (grid[g] - x) / bandwidth;
      acc += std::exp(-0.5 * z * z);
    }
    density[g] = acc * norm;
  }
  return density;
}

std::vector<double> kde_density(std::span<const double> samples,
                                std::span<const double> grid) {
  return kde_density(samples, grid, kde_bandwidth(samples));
}

}  // namespace fatigue
