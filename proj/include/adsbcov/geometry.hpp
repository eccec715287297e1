#pragma once

#include <cstdint>
#include <vector>

#include "adsbcov/rng.hpp"

namespace adsbcov {

/// Aircraft position in km; the ground station sits at the origin.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Finite airspace: x in [-Lx, Lx], y in [-Ly, Ly], z in [0, Lz], all km.
struct BoxSpace {
  double half_extent_x_km = 10.0;
  double half_extent_y_km = 10.0;
  double height_km = 10.0;

  double volume_km3() const {
    return 4.0 * half_extent_x_km * half_extent_y_km * height_km;
  }
};

/// Altitude slice [lo, hi] within the enclosing box.
struct AltitudeBand {
  double lo_km = 0.0;
  double hi_km = 0.0;

  double thickness_km() const { return hi_km - lo_km; }
};

/// Expected aircraft per km^3. Remembers whether the user wrote a density or
/// an absolute count so provenance survives into reports.
class Intensity {
 public:
  enum class Origin { kDensity, kCount };

  static Intensity from_density(double per_km3);
  /// count / reference_volume_km3; the box volume by convention.
  static Intensity from_count(double count, double reference_volume_km3);

  double per_km3() const { return per_km3_; }
  Origin origin() const { return origin_; }
  double count_in(double volume_km3) const { return per_km3_ * volume_km3; }

 private:
  Intensity(double per_km3, Origin origin)
      : per_km3_(per_km3), origin_(origin) {}
  double per_km3_ = 0.0;
  Origin origin_ = Origin::kDensity;
};

/// Distance class relative to the ground station.
enum class RangeBucket { kShort, kLong };

inline constexpr double kDefaultRangeCutoffKm = 15.0;

const char* to_string(RangeBucket bucket);

/// Volume of the band-restricted box, km^3. Throws if the band is inverted or
/// pokes outside [0, Lz].
double region_volume(const BoxSpace& space, const AltitudeBand& band);

/// Homogeneous Poisson population over the band-restricted box: count is
/// Poisson(intensity * region volume), coordinates independent uniforms.
std::vector<Point3> sample_population(const BoxSpace& space,
                                      const AltitudeBand& band,
                                      const Intensity& intensity,
                                      Philox4x64& rng);

double distance_to_gs(const Point3& p);

/// P(nearest transmitter closer than d) = 1 - exp(-(4/3) pi lambda d^3).
double nearest_distance_cdf(double d_km, const Intensity& intensity);

/// Density of the nearest-transmitter distance, 4 pi lambda d^2 exp(...).
double nearest_distance_pdf(double d_km, const Intensity& intensity);

/// Distance with nearest_distance_cdf(d) = mass.
double nearest_distance_quantile(double mass, const Intensity& intensity);

/// Short iff d < cutoff; the boundary itself counts as long range.
RangeBucket classify_range(double d_km, double cutoff_km = kDefaultRangeCutoffKm);

}  // namespace adsbcov
