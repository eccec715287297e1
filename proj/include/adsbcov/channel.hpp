#pragma once

#include "adsbcov/rng.hpp"

namespace adsbcov {

/// Positions are stored in km; pathloss d^(-alpha) is evaluated against a
/// 1 m reference, so distances are scaled by this factor first. The choice
/// only touches the noise term of the SINR: interference-to-signal ratios
/// carry the same unit factor on both sides and cancel.
inline constexpr double kPathlossUnitsPerKm = 1000.0;

double db_to_linear(double value_db);

/// Per-class transmitter power and combined tx*rx antenna gain.
struct RadioParams {
  double tx_power_w = 1.0;
  double total_gain_db = 0.0;

  double total_gain_linear() const { return db_to_linear(total_gain_db); }
};

/// Propagation and receiver-side constants shared by all links.
struct ChannelParams {
  double alpha = 2.0;                  // pathloss exponent
  double noise_density_dbm_hz = -174.0;
  double bandwidth_hz = 1e6;
  double fading_shape = 1.0;           // Gamma shape; 1 = Rayleigh

  double noise_power_w() const;
};

/// Thermal noise in watts from a dBm/Hz density and bandwidth.
double noise_power(double noise_density_dbm_hz, double bandwidth_hz);

/// d^(-alpha) with d already in pathloss units; rejects d = 0.
double pathloss_factor(double d, double alpha);

/// Small-scale power fading: Gamma with the given shape and mean 1
/// (exponential when shape = 1).
double sample_fading(double shape, Philox4x64& rng);

}  // namespace adsbcov
