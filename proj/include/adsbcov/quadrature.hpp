#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace adsbcov {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
};

struct IntegrateOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_depth = 48;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] (numpy leggauss reference values).
inline constexpr std::array<double, 7> kGl7Nodes = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
    0.0,                 0.4058451513773972,  0.7415311855993945,
    0.9491079123427585};
inline constexpr std::array<double, 7> kGl7Weights = {
    0.12948496616887065, 0.2797053914892766, 0.3818300505051183,
    0.41795918367346896, 0.3818300505051183, 0.2797053914892766,
    0.12948496616887065};
inline constexpr std::array<double, 15> kGl15Nodes = {
    -0.9879925180204854,  -0.937273392400706,  -0.8482065834104272,
    -0.7244177313601701,  -0.5709721726085388, -0.3941513470775634,
    -0.20119409399743451, 0.0,                 0.20119409399743451,
    0.3941513470775634,   0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,   0.937273392400706,   0.9879925180204854};
inline constexpr std::array<double, 15> kGl15Weights = {
    0.030753241996118647, 0.07036604748810807, 0.10715922046717177,
    0.1395706779261539,   0.16626920581699378, 0.18616100001556188,
    0.19843148532711125,  0.2025782419255609,  0.19843148532711125,
    0.18616100001556188,  0.16626920581699378, 0.1395706779261539,
    0.10715922046717177,  0.07036604748810807, 0.030753241996118647};

template <class F>
QuadratureResult panel(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double i15 = 0.0;
  for (std::size_t k = 0; k < 15; ++k)
    i15 += kGl15Weights[k] * f(mid + half * kGl15Nodes[k]);
  double i7 = 0.0;
  for (std::size_t k = 0; k < 7; ++k)
    i7 += kGl7Weights[k] * f(mid + half * kGl7Nodes[k]);
  i15 *= half;
  i7 *= half;
  return {i15, std::abs(i15 - i7)};
}

template <class F>
void refine(F&& f, double a, double b, QuadratureResult seed, double tol,
            int depth, int max_depth, QuadratureResult& total) {
  if (seed.error <= tol || depth >= max_depth) {
    total.value += seed.value;
    total.error += seed.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  auto left = panel(f, a, mid);
  auto right = panel(f, mid, b);
  refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, total);
  refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, total);
}

}  // namespace detail

/// Adaptive bisection with an embedded GL15/GL7 error estimate. Returns the
/// integral and an absolute error estimate; callers decide whether the
/// achieved error is acceptable. The local acceptance threshold tracks the
/// running magnitude of the whole integral, so the per-panel criterion is
/// err <= max(rel_tol * |I|, abs_tol) distributed across panels.
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           const IntegrateOptions& opt = {}) {
  if (a == b) return {0.0, 0.0};
  auto first = detail::panel(f, a, b);
  const double scale = std::max(std::abs(first.value), 1e-300);
  const double tol = std::max(opt.rel_tol * scale, opt.abs_tol);
  QuadratureResult total;
  detail::refine(f, a, b, first, tol, 0, opt.max_depth, total);
  return total;
}

/// Convenience: integrate after splitting at interior breakpoints (known kinks
/// of the integrand). Breakpoints outside (a, b) are ignored.
template <class F>
QuadratureResult integrate_split(F&& f, double a, double b,
                                 const std::vector<double>& breakpoints,
                                 const IntegrateOptions& opt = {}) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto r = integrate(f, cuts[i], cuts[i + 1], opt);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace adsbcov
