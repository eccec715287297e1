#include "adsbcov/stats.hpp"

#include <algorithm>
#include <cmath>

#include "adsbcov/errors.hpp"

namespace adsbcov {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile needs p in (0, 1)");

  // Acklam coefficients.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Halley refinement against the exact CDF via erfc.
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) throw DomainError("KS statistic needs samples");
  double stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_samples[i]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    stat = std::max(stat, std::max(f - lo, hi - f));
  }
  return stat;
}

double ks_critical_value(std::size_t n, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level in (0, 1)");
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  return c / std::sqrt(static_cast<double>(n));
}

MeanVar mean_variance(const std::vector<double>& xs) {
  MeanVar mv;
  if (xs.empty()) return mv;
  double sum = 0.0;
  for (double x : xs) sum += x;
  mv.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return mv;
  double ss = 0.0;
  for (double x : xs) ss += (x - mv.mean) * (x - mv.mean);
  mv.variance = ss / static_cast<double>(xs.size() - 1);
  return mv;
}

}  // namespace adsbcov
