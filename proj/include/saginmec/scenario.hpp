#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace saginmec {

/// Thrown on malformed or schema-violating scenario documents.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PrivateBitsMode { kOptimized, kFixedMin };

/// How the multicast shared-output size is derived from the cache-miss inputs
/// of a frame.
enum class SharedOutputForm { kMissAverage, kMissSum, kEqualInput };

/// Full parameterization of one mission: devices, links, compute, cache,
/// UAV and LEO geometry. All fields are SI and linear (dB-valued inputs are
/// converted when a scenario file is loaded).
struct ScenarioConfig {
  int num_devices = 8;  // K
  int num_frames = 60;  // N
  double frame_s = 7.0;

  int num_files = 3;
  int cache_capacity = 2;
  double zipf_rho = 0.6;

  double uplink_bw_hz = 40e6;
  double downlink_bw_hz = 40e6;
  double noise_psd_w_hz = 3.9810717055349695e-21;  // -174 dBm/Hz
  double tx_power_device_w = 0.2;
  double tx_power_uav_w = 0.2;
  double tx_power_leo_w = 0.2;

  double ref_gain_g2a = 1e-5;  // channel power gain at 1 m, ground-to-air
  double ref_gain_g2s = 1e-5;  // channel power gain at 1 m, ground-to-space
  double antenna_gain = 7000.0;
  double fading_g2a = 1.0;  // deterministic small-scale power factor
  double fading_g2s = 1.0;
  double fading_a2a = 1.0;  // no air-to-air link in the model; kept inert

  double cycles_per_bit_shared = 2640.0;
  double cycles_per_bit_private = 2640.0 * 0.3;
  double cpu_share_shared = 1.0;      // fraction of the LEO CPU for shared work
  Eigen::VectorXd cpu_share_device;   // per-device fraction of the server CPU
  double leo_cpu_hz = 1e11;           // cycles/s
  double uav_cpu_hz = 5e10;           // cycles/s
  double output_ratio_shared = 0.5;   // output bits per shared input bit
  double output_ratio_private = 0.5;  // output bits per private input bit
  double min_input_bits = 5e6;

  double prop_power_lambda1 = 9.26e-4;
  double prop_power_lambda2 = 2250.0;
  double gravity_mps2 = 9.8;

  double v_max_mps = 50.0;
  double a_max_mps2 = 5.0;
  double uav_alt_m = 1e3;
  Eigen::Vector2d uav_start_m{0.0, 5e3};
  Eigen::Vector2d uav_end_m{5e3, 10e3};

  double leo_alt_m = 600e3;
  double leo_speed_mps = 7.5e3;
  double earth_radius_m = 6.371e6;
  double coverage_half_angle_rad = 15.8 * 3.14159265358979323846 / 180.0;
  Eigen::Vector2d leo_anchor_m{5e3, 5e3};     // ground track at mid-mission
  Eigen::Vector2d leo_direction{-0.70710678118654752, -0.70710678118654752};

  Eigen::Matrix2Xd device_positions_m;  // one column per device
  Eigen::VectorXi device_file_request;  // 1-based file index per device

  PrivateBitsMode private_bits_mode = PrivateBitsMode::kOptimized;
  SharedOutputForm shared_output_form = SharedOutputForm::kMissAverage;
};

struct ValidationReport {
  std::vector<std::pair<std::string, std::string>> errors;    // (field, message)
  std::vector<std::pair<std::string, std::string>> warnings;  // (field, message)

  bool ok() const { return errors.empty(); }
};

/// Reference configuration with the baseline parameter set used throughout
/// the test scenarios (8 devices in a 10 km x 10 km area, 60 frames of 7 s).
ScenarioConfig default_scenario();

/// Resizes the per-device arrays (positions, file requests, CPU shares) to
/// config.num_devices, extending deterministically from the built-in preset.
void resize_device_arrays(ScenarioConfig& config);

/// Parses a scenario document (key = value lines, [device.k] tables).
/// Omitted fields keep their default_scenario() values.
/// Throws ScenarioError on parse failures, unknown keys or bad value types.
ScenarioConfig load_scenario(std::istream& source);
ScenarioConfig load_scenario(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

/// Writes a document that load_scenario() reproduces field-for-field.
void save_scenario(const ScenarioConfig& config, std::ostream& out);
std::string save_scenario(const ScenarioConfig& config);

/// Checks every structural invariant plus, constructively, that the mission
/// admits a feasible start: straight-line flight within the speed limits and
/// a minimum-bit allocation that fits every frame. Coverage-window overrun
/// is reported as a warning.
ValidationReport validate(const ScenarioConfig& config);

}  // namespace saginmec
