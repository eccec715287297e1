#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace adsbcov {

/// Inverse standard normal CDF. Acklam's rational approximation refined by a
/// single Halley step; accurate to ~1e-15 over (0, 1).
double normal_quantile(double p);

/// Two-sided Kolmogorov-Smirnov statistic of sorted samples against a CDF.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic two-sided critical value at significance `level`.
double ks_critical_value(std::size_t n, double level);

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n-1 denominator)
};

MeanVar mean_variance(const std::vector<double>& xs);

}  // namespace adsbcov
