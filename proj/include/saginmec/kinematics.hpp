#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "saginmec/scenario.hpp"

namespace saginmec {

/// Discrete UAV state over one mission. Columns are per-node samples:
/// q and v have N+1 columns (node i is the start of frame i+1), a has N.
/// The discrete recursion
///   v[i+1] = v[i] + a[i] dt,  q[i+1] = q[i] + v[i] dt + a[i] dt^2 / 2
/// is an invariant every producer must satisfy.
struct UavTrajectory {
  Eigen::Matrix2Xd q;  // horizontal positions, m
  Eigen::Matrix2Xd v;  // velocities, m/s
  Eigen::Matrix2Xd a;  // accelerations, m/s^2

  int num_frames() const { return static_cast<int>(a.cols()); }
};

/// Straight constant-speed ground track crossing `anchor` at the (possibly
/// fractional) mid-mission frame.
struct LeoOrbit {
  Eigen::Vector2d anchor_m;
  Eigen::Vector2d direction;  // unit norm
  double speed_mps = 0.0;
  double altitude_m = 0.0;
  double mid_frame = 0.0;  // frame index whose ground track equals anchor
};

struct KinematicResiduals {
  double max_recursion_defect_m = 0.0;   // worst |q,v recursion error|
  double max_speed_excess = 0.0;         // max ||v|| - v_max (can be negative)
  double max_accel_excess = 0.0;         // max ||a|| - a_max
  double start_defect_m = 0.0;
  double end_defect_m = 0.0;
  bool feasible = false;
};

/// Ground-track pass duration 2 (R_E + H_L) phi / v_L.
double coverage_time(const ScenarioConfig& config);

LeoOrbit make_leo_orbit(const ScenarioConfig& config);

/// Horizontal ground-track point at frame n (1-based; fractional n allowed
/// for the mid-mission anchor itself).
Eigen::Vector2d leo_ground_position(const LeoOrbit& orbit, double n,
                                    double frame_s);

/// Full 3-D position (x, y, H_L) at frame n. Throws std::out_of_range when
/// n is outside [1, num_frames].
Eigen::Vector3d leo_position(const LeoOrbit& orbit, int n, double frame_s,
                             int num_frames);

/// One step of the discrete state recursion.
inline void propagate(const Eigen::Vector2d& q, const Eigen::Vector2d& v,
                      const Eigen::Vector2d& a, double dt,
                      Eigen::Vector2d& q_next, Eigen::Vector2d& v_next) {
  v_next = v + a * dt;
  q_next = q + v * dt + 0.5 * dt * dt * a;
}

/// Audits the recursion, the speed/acceleration limits and the endpoint
/// pins against `config`. `tol_rel` scales with the mission extent.
KinematicResiduals kinematic_residuals(const UavTrajectory& traj,
                                       const ScenarioConfig& config,
                                       double tol_rel = 1e-6);

/// Constant-velocity path from uav_start_m to uav_end_m with a = 0.
/// Throws std::runtime_error when the endpoints need average speed > v_max.
UavTrajectory straight_line_trajectory(const ScenarioConfig& config);

}  // namespace saginmec
