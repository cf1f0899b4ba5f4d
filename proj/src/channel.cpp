#include "saginmec/channel.hpp"

#include <cmath>
#include <limits>

namespace saginmec {

double g2a_gain(const Eigen::Vector2d& q_uav, const Eigen::Vector2d& q_dev,
                const ScenarioConfig& config) {
  const double d2 = (q_uav - q_dev).squaredNorm();
  return config.ref_gain_g2a * config.fading_g2a /
         (d2 + config.uav_alt_m * config.uav_alt_m);
}

double g2s_gain(const Eigen::Vector2d& q_dev,
                const Eigen::Vector2d& q_leo_ground,
                const ScenarioConfig& config) {
  const double d2 = (q_dev - q_leo_ground).squaredNorm();
  return config.antenna_gain * config.ref_gain_g2s * config.fading_g2s /
         (d2 + config.leo_alt_m * config.leo_alt_m);
}

namespace {

inline double rate(double bw_hz, double rx_power_w, double noise_psd,
                   double channel_bw_hz) {
  return bw_hz * std::log2(1.0 + rx_power_w / (noise_psd * channel_bw_hz));
}

}  // namespace

double shared_uplink_rate(const ScenarioConfig& config, const LeoOrbit& orbit,
                          int k, int n) {
  const double h = g2s_gain(config.device_positions_m.col(k - 1),
                            leo_ground_position(orbit, n, config.frame_s),
                            config);
  const double per_device_bw = config.uplink_bw_hz / config.num_devices;
  return rate(per_device_bw, config.tx_power_device_w * h,
              config.noise_psd_w_hz, per_device_bw);
}

double shared_downlink_rate(const ScenarioConfig& config, const LeoOrbit& orbit,
                            int k, int n) {
  const double h = g2s_gain(config.device_positions_m.col(k - 1),
                            leo_ground_position(orbit, n, config.frame_s),
                            config);
  return rate(config.downlink_bw_hz, config.tx_power_leo_w * h,
              config.noise_psd_w_hz, config.downlink_bw_hz);
}

double shared_downlink_min(const ScenarioConfig& config, const LeoOrbit& orbit,
                           int n) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= config.num_devices; ++k)
    best = std::min(best, shared_downlink_rate(config, orbit, k, n));
  return best;
}

double private_uplink_rate(const ScenarioConfig& config, int k, double z,
                           double h_leo, const Eigen::Vector2d& q_uav) {
  const double h_uav =
      g2a_gain(q_uav, config.device_positions_m.col(k - 1), config);
  const double per_device_bw = config.uplink_bw_hz / config.num_devices;
  const double rx = config.tx_power_device_w * (z * h_leo + (1.0 - z) * h_uav);
  return rate(per_device_bw, rx, config.noise_psd_w_hz, per_device_bw);
}

double private_downlink_rate(const ScenarioConfig& config, int k, double z,
                             double h_leo, const Eigen::Vector2d& q_uav) {
  const double h_uav =
      g2a_gain(q_uav, config.device_positions_m.col(k - 1), config);
  const double per_device_bw = config.downlink_bw_hz / config.num_devices;
  const double rx = z * config.tx_power_leo_w * h_leo +
                    (1.0 - z) * config.tx_power_uav_w * h_uav;
  return rate(per_device_bw, rx, config.noise_psd_w_hz, per_device_bw);
}

RateTable make_rate_table(const ScenarioConfig& config, const LeoOrbit& orbit) {
  const int k_count = config.num_devices;
  const int n_count = config.num_frames;
  RateTable t;
  t.h_leo.resize(k_count, n_count);
  t.shared_ul.resize(k_count, n_count);
  t.shared_dl.resize(k_count, n_count);
  t.shared_dl_min.resize(n_count);
  for (int n = 1; n <= n_count; ++n) {
    const Eigen::Vector2d ground =
        leo_ground_position(orbit, n, config.frame_s);
    for (int k = 1; k <= k_count; ++k) {
      t.h_leo(k - 1, n - 1) =
          g2s_gain(config.device_positions_m.col(k - 1), ground, config);
      t.shared_ul(k - 1, n - 1) = shared_uplink_rate(config, orbit, k, n);
      t.shared_dl(k - 1, n - 1) = shared_downlink_rate(config, orbit, k, n);
    }
    t.shared_dl_min[n - 1] = t.shared_dl.col(n - 1).minCoeff();
  }
  return t;
}

}  // namespace saginmec
