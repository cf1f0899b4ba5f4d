#include "saginmec/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace saginmec {
namespace {

// Frozen device preset: 8 positions spread over the 10 km x 10 km service
// area, ordered left to right so devices 1-2 are leftmost and 7-8 rightmost.
constexpr double kPresetPositions[8][2] = {
    {1200.0, 6500.0}, {1800.0, 3000.0}, {3500.0, 7800.0}, {4200.0, 4600.0},
    {5400.0, 8300.0}, {5800.0, 2400.0}, {8300.0, 6900.0}, {8800.0, 3600.0}};
constexpr int kPresetRequests[8] = {1, 2, 1, 2, 1, 2, 3, 3};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Raw key/value view of a document, with consumption tracking so unknown
// keys can be reported.
class KeyValueDoc {
 public:
  explicit KeyValueDoc(std::istream& in) {
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ScenarioError("line " + std::to_string(lineno) +
                              ": unterminated table header");
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty())
          throw ScenarioError("line " + std::to_string(lineno) +
                              ": empty table header");
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ScenarioError("line " + std::to_string(lineno) +
                            ": expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ScenarioError("line " + std::to_string(lineno) +
                                           ": empty key");
      if (!section.empty()) key = section + "." + key;
      if (!entries_.emplace(key, value).second)
        throw ScenarioError("duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  // Fetches and marks a key consumed; returns false if absent.
  bool take(const std::string& key, std::string& value) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    value = it->second;
    consumed_.insert(key);
    return true;
  }

  std::vector<std::string> unconsumed() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
      if (!consumed_.count(k)) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, std::string> entries_;
  std::set<std::string> consumed_;
};

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0')
    throw ScenarioError("key '" + key + "': expected a number, got '" + text +
                        "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || std::abs(r) > 2e9)
    throw ScenarioError("key '" + key + "': expected an integer, got '" +
                        text + "'");
  return static_cast<int>(r);
}

Eigen::Vector2d parse_pair(const std::string& key, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ScenarioError("key '" + key + "': expected 'x, y'");
  return {parse_double(key, text.substr(0, comma)),
          parse_double(key, text.substr(comma + 1))};
}

struct FieldReader {
  KeyValueDoc& doc;

  void num(const std::string& key, double& field) {
    std::string v;
    if (doc.take(key, v)) field = parse_double(key, v);
  }
  void count(const std::string& key, int& field) {
    std::string v;
    if (doc.take(key, v)) field = parse_int(key, v);
  }
  void pair(const std::string& key, Eigen::Vector2d& field) {
    std::string v;
    if (doc.take(key, v)) field = parse_pair(key, v);
  }
  // Linear-valued key with a dB-valued alternate (exactly one may be given).
  void num_db(const std::string& key, const std::string& db_key, double& field,
              double scale = 1.0) {
    std::string lin, db;
    const bool has_lin = doc.take(key, lin);
    const bool has_db = doc.take(db_key, db);
    if (has_lin && has_db)
      throw ScenarioError("keys '" + key + "' and '" + db_key +
                          "' are alternates; give only one");
    if (has_lin) field = parse_double(key, lin);
    if (has_db) field = db_to_linear(parse_double(db_key, db)) * scale;
  }
};

}  // namespace

ScenarioConfig default_scenario() {
  ScenarioConfig config;
  resize_device_arrays(config);
  return config;
}

void resize_device_arrays(ScenarioConfig& config) {
  const int k = config.num_devices;
  if (k < 0) throw ScenarioError("devices: must be nonnegative");
  config.device_positions_m.resize(2, k);
  config.device_file_request.resize(k);
  config.cpu_share_device = Eigen::VectorXd::Constant(k, 0.8);
  for (int i = 0; i < k; ++i) {
    const int p = i % 8;
    // Past the preset size, shift repeated copies east so positions stay
    // distinct and deterministic.
    const double dx = 500.0 * (i / 8);
    config.device_positions_m.col(i) =
        Eigen::Vector2d(kPresetPositions[p][0] + dx, kPresetPositions[p][1]);
    config.device_file_request[i] =
        std::min(kPresetRequests[p], config.num_files > 0 ? config.num_files : 1);
  }
}

ScenarioConfig load_scenario(std::istream& source) {
  KeyValueDoc doc(source);
  FieldReader r{doc};
  ScenarioConfig c;

  r.count("devices", c.num_devices);
  r.count("frames", c.num_frames);
  r.num("frame_s", c.frame_s);
  r.count("files", c.num_files);
  r.count("cache_capacity", c.cache_capacity);
  r.num("zipf_rho", c.zipf_rho);
  r.num("uplink_bw_hz", c.uplink_bw_hz);
  r.num("downlink_bw_hz", c.downlink_bw_hz);
  r.num_db("noise_psd_w_hz", "noise_psd_dbm_hz", c.noise_psd_w_hz, 1e-3);
  r.num("tx_power_device_w", c.tx_power_device_w);
  r.num("tx_power_uav_w", c.tx_power_uav_w);
  r.num("tx_power_leo_w", c.tx_power_leo_w);
  r.num("ref_gain_g2a", c.ref_gain_g2a);
  r.num("ref_gain_g2s", c.ref_gain_g2s);
  r.num("antenna_gain", c.antenna_gain);
  r.num_db("fading_g2a", "fading_g2a_db", c.fading_g2a);
  r.num_db("fading_g2s", "fading_g2s_db", c.fading_g2s);
  r.num_db("fading_a2a", "fading_a2a_db", c.fading_a2a);
  r.num("cycles_per_bit_shared", c.cycles_per_bit_shared);
  r.num("cycles_per_bit_private", c.cycles_per_bit_private);
  r.num("cpu_share_shared", c.cpu_share_shared);
  double cpu_share_default = 0.8;
  r.num("cpu_share_device", cpu_share_default);
  r.num("leo_cpu_hz", c.leo_cpu_hz);
  r.num("uav_cpu_hz", c.uav_cpu_hz);
  r.num("output_ratio_shared", c.output_ratio_shared);
  r.num("output_ratio_private", c.output_ratio_private);
  r.num("min_input_bits", c.min_input_bits);
  r.num("prop_power_lambda1", c.prop_power_lambda1);
  r.num("prop_power_lambda2", c.prop_power_lambda2);
  r.num("gravity_mps2", c.gravity_mps2);
  r.num("v_max_mps", c.v_max_mps);
  r.num("a_max_mps2", c.a_max_mps2);
  r.num("uav_alt_m", c.uav_alt_m);
  r.pair("uav_start_m", c.uav_start_m);
  r.pair("uav_end_m", c.uav_end_m);
  r.num("leo_alt_m", c.leo_alt_m);
  r.num("leo_speed_mps", c.leo_speed_mps);
  r.num("earth_radius_m", c.earth_radius_m);
  {
    std::string rad, deg;
    const bool has_rad = doc.take("coverage_half_angle_rad", rad);
    const bool has_deg = doc.take("coverage_half_angle_deg", deg);
    if (has_rad && has_deg)
      throw ScenarioError(
          "coverage_half_angle_rad and coverage_half_angle_deg are "
          "alternates; give only one");
    if (has_rad)
      c.coverage_half_angle_rad = parse_double("coverage_half_angle_rad", rad);
    if (has_deg)
      c.coverage_half_angle_rad =
          parse_double("coverage_half_angle_deg", deg) * M_PI / 180.0;
  }
  r.pair("leo_anchor_m", c.leo_anchor_m);
  r.pair("leo_direction", c.leo_direction);

  {
    std::string mode;
    if (doc.take("private_bits_mode", mode)) {
      if (mode == "optimized")
        c.private_bits_mode = PrivateBitsMode::kOptimized;
      else if (mode == "fixed_min")
        c.private_bits_mode = PrivateBitsMode::kFixedMin;
      else
        throw ScenarioError("private_bits_mode: expected 'optimized' or "
                            "'fixed_min', got '" + mode + "'");
    }
    std::string form;
    if (doc.take("shared_output_form", form)) {
      if (form == "miss_average")
        c.shared_output_form = SharedOutputForm::kMissAverage;
      else if (form == "miss_sum")
        c.shared_output_form = SharedOutputForm::kMissSum;
      else if (form == "equal_input")
        c.shared_output_form = SharedOutputForm::kEqualInput;
      else
        throw ScenarioError("shared_output_form: expected 'miss_average', "
                            "'miss_sum' or 'equal_input', got '" + form + "'");
    }
  }

  resize_device_arrays(c);
  c.cpu_share_device.setConstant(cpu_share_default);
  for (int i = 0; i < c.num_devices; ++i) {
    const std::string prefix = "device." + std::to_string(i + 1) + ".";
    Eigen::Vector2d pos = c.device_positions_m.col(i);
    r.pair(prefix + "position_m", pos);
    c.device_positions_m.col(i) = pos;
    int req = c.device_file_request[i];
    r.count(prefix + "file_request", req);
    c.device_file_request[i] = req;
    double share = c.cpu_share_device[i];
    r.num(prefix + "cpu_share", share);
    c.cpu_share_device[i] = share;
  }

  const auto leftover = doc.unconsumed();
  if (!leftover.empty()) {
    std::string msg = "unknown key(s):";
    for (const auto& k : leftover) msg += " '" + k + "'";
    throw ScenarioError(msg);
  }
  return c;
}

ScenarioConfig load_scenario(const std::string& text) {
  std::istringstream in(text);
  return load_scenario(in);
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  return load_scenario(in);
}

void save_scenario(const ScenarioConfig& c, std::ostream& out) {
  auto kv = [&](const char* key, double v) {
    out << key << " = " << format_double(v) << "\n";
  };
  auto kvi = [&](const char* key, int v) { out << key << " = " << v << "\n"; };
  auto kvp = [&](const char* key, const Eigen::Vector2d& v) {
    out << key << " = " << format_double(v.x()) << ", " << format_double(v.y())
        << "\n";
  };

  kvi("devices", c.num_devices);
  kvi("frames", c.num_frames);
  kv("frame_s", c.frame_s);
  kvi("files", c.num_files);
  kvi("cache_capacity", c.cache_capacity);
  kv("zipf_rho", c.zipf_rho);
  kv("uplink_bw_hz", c.uplink_bw_hz);
  kv("downlink_bw_hz", c.downlink_bw_hz);
  kv("noise_psd_w_hz", c.noise_psd_w_hz);
  kv("tx_power_device_w", c.tx_power_device_w);
  kv("tx_power_uav_w", c.tx_power_uav_w);
  kv("tx_power_leo_w", c.tx_power_leo_w);
  kv("ref_gain_g2a", c.ref_gain_g2a);
  kv("ref_gain_g2s", c.ref_gain_g2s);
  kv("antenna_gain", c.antenna_gain);
  kv("fading_g2a", c.fading_g2a);
  kv("fading_g2s", c.fading_g2s);
  kv("fading_a2a", c.fading_a2a);
  kv("cycles_per_bit_shared", c.cycles_per_bit_shared);
  kv("cycles_per_bit_private", c.cycles_per_bit_private);
  kv("cpu_share_shared", c.cpu_share_shared);
  kv("leo_cpu_hz", c.leo_cpu_hz);
  kv("uav_cpu_hz", c.uav_cpu_hz);
  kv("output_ratio_shared", c.output_ratio_shared);
  kv("output_ratio_private", c.output_ratio_private);
  kv("min_input_bits", c.min_input_bits);
  kv("prop_power_lambda1", c.prop_power_lambda1);
  kv("prop_power_lambda2", c.prop_power_lambda2);
  kv("gravity_mps2", c.gravity_mps2);
  kv("v_max_mps", c.v_max_mps);
  kv("a_max_mps2", c.a_max_mps2);
  kv("uav_alt_m", c.uav_alt_m);
  kvp("uav_start_m", c.uav_start_m);
  kvp("uav_end_m", c.uav_end_m);
  kv("leo_alt_m", c.leo_alt_m);
  kv("leo_speed_mps", c.leo_speed_mps);
  kv("earth_radius_m", c.earth_radius_m);
  kv("coverage_half_angle_rad", c.coverage_half_angle_rad);
  kvp("leo_anchor_m", c.leo_anchor_m);
  kvp("leo_direction", c.leo_direction);
  out << "private_bits_mode = "
      << (c.private_bits_mode == PrivateBitsMode::kOptimized ? "optimized"
                                                             : "fixed_min")
      << "\n";
  out << "shared_output_form = "
      << (c.shared_output_form == SharedOutputForm::kMissAverage
              ? "miss_average"
              : c.shared_output_form == SharedOutputForm::kMissSum
                    ? "miss_sum"
                    : "equal_input")
      << "\n";
  for (int i = 0; i < c.num_devices; ++i) {
    out << "\n[device." << (i + 1) << "]\n";
    out << "position_m = " << format_double(c.device_positions_m(0, i)) << ", "
        << format_double(c.device_positions_m(1, i)) << "\n";
    out << "file_request = " << c.device_file_request[i] << "\n";
    out << "cpu_share = " << format_double(c.cpu_share_device[i]) << "\n";
  }
}

std::string save_scenario(const ScenarioConfig& config) {
  std::ostringstream out;
  save_scenario(config, out);
  return out.str();
}

}  // namespace saginmec
