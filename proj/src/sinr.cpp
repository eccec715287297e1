#include "adsbcov/sinr.hpp"

#include <cmath>

#include "adsbcov/errors.hpp"

namespace adsbcov {

double interference_sum(std::span<const RealizedTransmitter> transmitters,
                        double gain_linear, double alpha,
                        std::optional<std::size_t> exclude) {
  double sum = 0.0;
  for (std::size_t i = 0; i < transmitters.size(); ++i) {
    if (exclude && *exclude == i) continue;
    const double d = distance_to_gs(transmitters[i].position) * kPathlossUnitsPerKm;
    sum += gain_linear * transmitters[i].fading * pathloss_factor(d, alpha);
  }
  return sum;
}

SinrBreakdown compute_sinr(std::size_t target_index,
                           std::span<const RealizedTransmitter> uavs,
                           std::span<const RealizedTransmitter> cas,
                           const RadioParams& uav_radio,
                           const RadioParams& ca_radio,
                           const ChannelParams& channel) {
  if (uavs.empty() || target_index >= uavs.size())
    throw NoTargetError("no target UAV at the requested index");

  const RealizedTransmitter& target = uavs[target_index];
  const double d = distance_to_gs(target.position) * kPathlossUnitsPerKm;

  SinrBreakdown out;
  out.noise_w = channel.noise_power_w();
  out.signal_w = uav_radio.tx_power_w * uav_radio.total_gain_linear() *
                 target.fading * pathloss_factor(d, channel.alpha);
  out.uav_interference_w =
      uav_radio.tx_power_w * interference_sum(uavs, uav_radio.total_gain_linear(),
                                              channel.alpha, target_index);
  out.ca_interference_w =
      ca_radio.tx_power_w *
      interference_sum(cas, ca_radio.total_gain_linear(), channel.alpha);
  out.sinr = out.signal_w /
             (out.noise_w + out.uav_interference_w + out.ca_interference_w);
  return out;
}

bool success(double sinr, double theta_db) {
  return sinr >= db_to_linear(theta_db);
}

}  // namespace adsbcov
