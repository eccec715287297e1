#include "adsbcov/channel.hpp"

#include <cmath>

#include "adsbcov/errors.hpp"

namespace adsbcov {

double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

double noise_power(double noise_density_dbm_hz, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be > 0");
  return std::pow(10.0, (noise_density_dbm_hz - 30.0) / 10.0) * bandwidth_hz;
}

double ChannelParams::noise_power_w() const {
  return noise_power(noise_density_dbm_hz, bandwidth_hz);
}

double pathloss_factor(double d, double alpha) {
  if (!(d > 0.0))
    throw SingularDistanceError("pathloss undefined at zero distance");
  return std::pow(d, -alpha);
}

double sample_fading(double shape, Philox4x64& rng) {
  return gamma_mean_one(rng, shape);
}

}  // namespace adsbcov
