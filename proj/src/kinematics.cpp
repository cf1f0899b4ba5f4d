#include "saginmec/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace saginmec {

double coverage_time(const ScenarioConfig& config) {
  return 2.0 * (config.earth_radius_m + config.leo_alt_m) *
         config.coverage_half_angle_rad / config.leo_speed_mps;
}

LeoOrbit make_leo_orbit(const ScenarioConfig& config) {
  LeoOrbit orbit;
  orbit.anchor_m = config.leo_anchor_m;
  orbit.direction = config.leo_direction;
  orbit.speed_mps = config.leo_speed_mps;
  orbit.altitude_m = config.leo_alt_m;
  orbit.mid_frame = 0.5 * (config.num_frames + 1);
  return orbit;
}

Eigen::Vector2d leo_ground_position(const LeoOrbit& orbit, double n,
                                    double frame_s) {
  return orbit.anchor_m +
         orbit.direction * orbit.speed_mps * (n - orbit.mid_frame) * frame_s;
}

Eigen::Vector3d leo_position(const LeoOrbit& orbit, int n, double frame_s,
                             int num_frames) {
  if (n < 1 || n > num_frames)
    throw std::out_of_range("leo_position: frame index out of range");
  const Eigen::Vector2d g = leo_ground_position(orbit, n, frame_s);
  return {g.x(), g.y(), orbit.altitude_m};
}

KinematicResiduals kinematic_residuals(const UavTrajectory& traj,
                                       const ScenarioConfig& config,
                                       double tol_rel) {
  const int n = config.num_frames;
  if (traj.q.cols() != n + 1 || traj.v.cols() != n + 1 || traj.a.cols() != n)
    throw std::invalid_argument("kinematic_residuals: array lengths do not "
                                "match the frame count");
  const double dt = config.frame_s;
  KinematicResiduals r;
  for (int i = 0; i < n; ++i) {
    Eigen::Vector2d qn, vn;
    propagate(traj.q.col(i), traj.v.col(i), traj.a.col(i), dt, qn, vn);
    r.max_recursion_defect_m =
        std::max(r.max_recursion_defect_m,
                 std::max((qn - traj.q.col(i + 1)).norm(),
                          (vn - traj.v.col(i + 1)).norm() * dt));
    r.max_accel_excess =
        std::max(r.max_accel_excess, traj.a.col(i).norm() - config.a_max_mps2);
  }
  r.max_speed_excess = traj.v.colwise().norm().maxCoeff() - config.v_max_mps;
  r.start_defect_m = (traj.q.col(0) - config.uav_start_m).norm();
  r.end_defect_m = (traj.q.col(n) - config.uav_end_m).norm();

  const double extent =
      std::max({(config.uav_end_m - config.uav_start_m).norm(),
                config.v_max_mps * dt * n, 1.0});
  const double tol = tol_rel * extent;
  r.feasible = r.max_recursion_defect_m <= tol && r.start_defect_m <= tol &&
               r.end_defect_m <= tol &&
               r.max_speed_excess <= tol_rel * std::max(config.v_max_mps, 1.0) &&
               r.max_accel_excess <= tol_rel * std::max(config.a_max_mps2, 1.0);
  return r;
}

UavTrajectory straight_line_trajectory(const ScenarioConfig& config) {
  const int n = config.num_frames;
  const double dt = config.frame_s;
  const Eigen::Vector2d span = config.uav_end_m - config.uav_start_m;
  const Eigen::Vector2d vel = span / (n * dt);
  if (vel.norm() > config.v_max_mps)
    throw std::runtime_error("straight_line_trajectory: endpoints unreachable "
                             "at v_max");
  UavTrajectory traj;
  traj.q.resize(2, n + 1);
  traj.v = vel.replicate(1, n + 1);
  traj.a = Eigen::Matrix2Xd::Zero(2, n);
  for (int i = 0; i <= n; ++i)
    traj.q.col(i) = config.uav_start_m + vel * (i * dt);
  return traj;
}

}  // namespace saginmec
