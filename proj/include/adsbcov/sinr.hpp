#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "adsbcov/channel.hpp"
#include "adsbcov/geometry.hpp"

namespace adsbcov {

enum class AircraftClass { kUav, kCa };

/// One transmitter of a realized population: position plus one fading draw.
struct RealizedTransmitter {
  Point3 position;
  double fading = 1.0;
  AircraftClass cls = AircraftClass::kUav;
};

/// SINR of a designated target with every component spelled out.
struct SinrBreakdown {
  double signal_w = 0.0;
  double noise_w = 0.0;
  double uav_interference_w = 0.0;
  double ca_interference_w = 0.0;
  double sinr = 0.0;
};

/// Power-free interference sum: gain * h * d^(-alpha) over the sequence,
/// skipping `exclude` when given. The caller multiplies by the class transmit
/// power. Distances are taken in pathloss units (meters).
double interference_sum(std::span<const RealizedTransmitter> transmitters,
                        double gain_linear, double alpha,
                        std::optional<std::size_t> exclude = std::nullopt);

/// SINR of uavs[target_index] against everything else transmitting at once.
SinrBreakdown compute_sinr(std::size_t target_index,
                           std::span<const RealizedTransmitter> uavs,
                           std::span<const RealizedTransmitter> cas,
                           const RadioParams& uav_radio,
                           const RadioParams& ca_radio,
                           const ChannelParams& channel);

/// Decode success: sinr >= 10^(theta_db/10), boundary inclusive.
bool success(double sinr, double theta_db);

}  // namespace adsbcov
