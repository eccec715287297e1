#include "adsbcov/geometry.hpp"

#include <cmath>

#include "adsbcov/errors.hpp"

namespace adsbcov {

Intensity Intensity::from_density(double per_km3) {
  if (!(per_km3 >= 0.0)) throw DomainError("intensity must be >= 0");
  return Intensity(per_km3, Origin::kDensity);
}

Intensity Intensity::from_count(double count, double reference_volume_km3) {
  if (!(count >= 0.0)) throw DomainError("aircraft count must be >= 0");
  if (!(reference_volume_km3 > 0.0))
    throw DomainError("reference volume must be > 0");
  return Intensity(count / reference_volume_km3, Origin::kCount);
}

const char* to_string(RangeBucket bucket) {
  return bucket == RangeBucket::kShort ? "short" : "long";
}

double region_volume(const BoxSpace& space, const AltitudeBand& band) {
  if (!(band.lo_km >= 0.0) || !(band.hi_km >= band.lo_km) ||
      !(band.hi_km <= space.height_km)) {
    throw DomainError("altitude band must satisfy 0 <= lo <= hi <= Lz");
  }
  return 4.0 * space.half_extent_x_km * space.half_extent_y_km *
         band.thickness_km();
}

std::vector<Point3> sample_population(const BoxSpace& space,
                                      const AltitudeBand& band,
                                      const Intensity& intensity,
                                      Philox4x64& rng) {
  const double mean = intensity.per_km3() * region_volume(space, band);
  const std::uint64_t n = poisson(rng, mean);
  std::vector<Point3> points;
  points.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    Point3 p;
    p.x = uniform(rng, -space.half_extent_x_km, space.half_extent_x_km);
    p.y = uniform(rng, -space.half_extent_y_km, space.half_extent_y_km);
    p.z = uniform(rng, band.lo_km, band.hi_km);
    points.push_back(p);
  }
  return points;
}

double distance_to_gs(const Point3& p) {
  return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

namespace {

double ball_exponent(double d_km, const Intensity& intensity) {
  return 4.0 / 3.0 * M_PI * intensity.per_km3() * d_km * d_km * d_km;
}

}  // namespace

double nearest_distance_cdf(double d_km, const Intensity& intensity) {
  if (d_km < 0.0) throw DomainError("distance must be >= 0");
  if (!(intensity.per_km3() > 0.0)) throw DomainError("intensity must be > 0");
  return -std::expm1(-ball_exponent(d_km, intensity));
}

double nearest_distance_pdf(double d_km, const Intensity& intensity) {
  if (d_km < 0.0) throw DomainError("distance must be >= 0");
  if (!(intensity.per_km3() > 0.0)) throw DomainError("intensity must be > 0");
  return 4.0 * M_PI * intensity.per_km3() * d_km * d_km *
         std::exp(-ball_exponent(d_km, intensity));
}

double nearest_distance_quantile(double mass, const Intensity& intensity) {
  if (!(mass >= 0.0 && mass < 1.0)) throw DomainError("mass must be in [0, 1)");
  if (!(intensity.per_km3() > 0.0)) throw DomainError("intensity must be > 0");
  // invert 1 - exp(-(4/3) pi lambda d^3) = mass
  const double e = -std::log1p(-mass);
  return std::cbrt(3.0 * e / (4.0 * M_PI * intensity.per_km3()));
}

RangeBucket classify_range(double d_km, double cutoff_km) {
  if (d_km < 0.0) throw DomainError("distance must be >= 0");
  return d_km < cutoff_km ? RangeBucket::kShort : RangeBucket::kLong;
}

}  // namespace adsbcov
