#pragma once

#include <span>
#include <vector>

namespace fatigue {

// ---------------------------------------------------------------------------
// Normal distribution
// ---------------------------------------------------------------------------

double normal_pdf(double x, double mu, double sigma);
double normal_logpdf(double x, double mu, double sigma);

// CDF via the complementary error function: accurate in the body and stable
// deep into both tails.
double normal_cdf(double x, double mu, double sigma);
double normal_sf(double x, double mu, double sigma);      // 1 - cdf
double normal_logcdf(double x, double mu, double sigma);
double normal_logsf(double x, double mu, double sigma);   // log(1 - cdf)

// Inverse CDF; rational approximation polished with one Newton step.
double normal_quantile(double p, double mu, double sigma);

struct Normal {
  double mu;
  double sigma;
  Normal(double mu, double sigma);
  double logpdf(double x) const { return normal_logpdf(x, mu, sigma); }
  double cdf(double x) const { return normal_cdf(x, mu, sigma); }
  double quantile(double p) const { return normal_quantile(p, mu, sigma); }
};

// ---------------------------------------------------------------------------
// Smallest extreme value (Gumbel-minimum) distribution
//
// pdf(x) = (1/sigma) exp(z - e^z),   z = (x - mu)/sigma
// cdf(x) = 1 - exp(-e^z)
// If log10(N) is sev(mu, sigma) then N is Weibull with scale 10^mu and
// shape 1/(sigma ln 10).
// ---------------------------------------------------------------------------

double sev_pdf(double x, double mu, double sigma);
double sev_logpdf(double x, double mu, double sigma);
double sev_cdf(double x, double mu, double sigma);
double sev_sf(double x, double mu, double sigma);         // exp(-e^z), exact
double sev_logcdf(double x, double mu, double sigma);
double sev_logsf(double x, double mu, double sigma);      // -e^z, exact
double sev_quantile(double p, double mu, double sigma);

struct Sev {
  double mu;
  double sigma;
  Sev(double mu, double sigma);
  double logpdf(double x) const { return sev_logpdf(x, mu, sigma); }
  double cdf(double x) const { return sev_cdf(x, mu, sigma); }
  double quantile(double p) const { return sev_quantile(p, mu, sigma); }
};

// ---------------------------------------------------------------------------
// Inverse gamma distribution (shape a, scale b)
//
// log pdf(x) = a ln b - ln Gamma(a) - (a+1) ln x - b/x for x > 0.
// Out-of-support x returns -inf rather than raising, so samplers reject
// naturally.
// ---------------------------------------------------------------------------

double invgamma_logpdf(double x, double shape, double scale);

struct InverseGamma {
  double shape;
  double scale;
  InverseGamma(double shape, double scale);
  double logpdf(double x) const { return invgamma_logpdf(x, shape, scale); }
};

// ---------------------------------------------------------------------------
// Uniform interval
// ---------------------------------------------------------------------------

// -ln(hi - lo) inside [lo, hi], -inf outside.
double uniform_logpdf(double x, double lo, double hi);

struct UniformInterval {
  double lo;
  double hi;
  UniformInterval(double lo, double hi);
  double logpdf(double x) const { return uniform_logpdf(x, lo, hi); }
};

// ---------------------------------------------------------------------------
// Kernel density estimation (normal kernel)
// ---------------------------------------------------------------------------

// Bandwidth rule for normal kernels: h = 1.06 * sigma_hat * n^(-1/5) with the
// robust spread sigma_hat = min(sample SD, IQR/1.34); falls back to the SD
// when the IQR degenerates to zero. Throws DataError for fewer than two
// samples or zero spread.
double kde_bandwidth(std::span<const double> samples);

// Evaluates the Gaussian-kernel density estimate on the given grid.
std::vector<double> kde_density(std::span<const double> samples,
                                std::span<const double> grid);
std::vector<double> kde_density(std::span<const double> samples,
                                std::span<const double> grid, double bandwidth);

// Type-7 (linear interpolation) sample quantile of unsorted data. Shared by
// the KDE bandwidth rule and the bootstrap percentile intervals.
double sample_quantile(std::span<const double> values, double p);

}  // namespace fatigue
