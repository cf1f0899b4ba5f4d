#pragma once

#include <Eigen/Dense>

#include "saginmec/kinematics.hpp"
#include "saginmec/scenario.hpp"

namespace saginmec {

/// Ground-to-air channel power gain between a device and the UAV,
/// beta0 chi / (horizontal distance^2 + H_U^2).
double g2a_gain(const Eigen::Vector2d& q_uav, const Eigen::Vector2d& q_dev,
                const ScenarioConfig& config);

/// Ground-to-space channel power gain between a device and the LEO,
/// G beta1 chi / (ground-track distance^2 + H_L^2).
double g2s_gain(const Eigen::Vector2d& q_dev,
                const Eigen::Vector2d& q_leo_ground,
                const ScenarioConfig& config);

/// Uplink rate of device k's shared transmission toward the LEO in frame n:
/// (W_ul / K) log2(1 + p_D h / (N0 W_ul / K)).
double shared_uplink_rate(const ScenarioConfig& config, const LeoOrbit& orbit,
                          int k, int n);

/// Multicast downlink rate toward device k over the full downlink band:
/// W_dl log2(1 + p_L h / (N0 W_dl)).
double shared_downlink_rate(const ScenarioConfig& config, const LeoOrbit& orbit,
                            int k, int n);

/// min over devices of shared_downlink_rate, the multicast bottleneck.
double shared_downlink_min(const ScenarioConfig& config, const LeoOrbit& orbit,
                           int n);

/// Unicast private rates as functions of the (possibly relaxed) offloading
/// decision z in [0, 1]: z = 1 routes over the LEO link, z = 0 over the UAV.
double private_uplink_rate(const ScenarioConfig& config, int k, double z,
                           double h_leo, const Eigen::Vector2d& q_uav);
double private_downlink_rate(const ScenarioConfig& config, int k, double z,
                             double h_leo, const Eigen::Vector2d& q_uav);

/// Per-mission tables of everything that does not depend on the UAV path:
/// LEO gains and the shared-phase rates, frame by frame.
struct RateTable {
  Eigen::MatrixXd h_leo;          // K x N ground-to-space gains
  Eigen::MatrixXd shared_ul;      // K x N bits/s
  Eigen::MatrixXd shared_dl;      // K x N bits/s
  Eigen::VectorXd shared_dl_min;  // N bits/s

  double private_ul(const ScenarioConfig& config, int k, int n, double z,
                    const Eigen::Vector2d& q_uav) const {
    return private_uplink_rate(config, k, z, h_leo(k - 1, n - 1), q_uav);
  }
  double private_dl(const ScenarioConfig& config, int k, int n, double z,
                    const Eigen::Vector2d& q_uav) const {
    return private_downlink_rate(config, k, z, h_leo(k - 1, n - 1), q_uav);
  }
};

RateTable make_rate_table(const ScenarioConfig& config, const LeoOrbit& orbit);

}  // namespace saginmec
