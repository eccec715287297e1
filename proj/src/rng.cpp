#include "adsbcov/rng.hpp"

#include <cmath>

#include "adsbcov/errors.hpp"

namespace adsbcov {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 p =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline void round_once(std::array<std::uint64_t, 4>& ctr,
                       const std::array<std::uint64_t, 2>& key) {
  std::uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, ctr[0], hi0, lo0);
  mulhilo(kMul1, ctr[2], hi1, lo1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// Gamma(shape, scale 1) for shape >= 1, Marsaglia-Tsang.
double gamma_shape_ge1(Philox4x64& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal01(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(std::array<std::uint64_t, 4> ctr,
                                               std::array<std::uint64_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    round_once(ctr, key);
  }
  return ctr;
}

double uniform01(Philox4x64& rng) {
  return static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
}

double uniform(Philox4x64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double exponential(Philox4x64& rng, double mean) {
  // 1 - u is in (0, 1], so the log is finite; u == 0 maps to draw 0.
  return -mean * std::log1p(-uniform01(rng));
}

double normal01(Philox4x64& rng) {
  // Box-Muller, cosine branch only; keeps stream consumption fixed at two
  // words per draw.
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(2.0 * M_PI * u2);
}

double gamma_mean_one(Philox4x64& rng, double shape) {
  if (!(shape > 0.0)) throw DomainError("fading shape must be > 0");
  if (shape == 1.0) return exponential(rng, 1.0);
  double g;
  if (shape < 1.0) {
    const double u = uniform01(rng);
    g = gamma_shape_ge1(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  } else {
    g = gamma_shape_ge1(rng, shape);
  }
  return g / shape;  // scale 1/shape gives mean 1
}

std::uint64_t poisson(Philox4x64& rng, double mean) {
  if (!(mean >= 0.0)) throw DomainError("poisson mean must be >= 0");
  if (mean == 0.0) return 0;
  std::uint64_t count = 0;
  double acc = exponential(rng, 1.0);
  while (acc <= mean) {
    ++count;
    acc += exponential(rng, 1.0);
  }
  return count;
}

}  // namespace adsbcov
