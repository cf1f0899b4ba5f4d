#pragma once

#include <vector>

#include <Eigen/Dense>

#include "saginmec/scenario.hpp"

namespace saginmec {

/// Result of the cache placement step: which files the LEO holds and, per
/// device, whether its requested file is a hit (c_k = 1) or a miss.
struct CachePlan {
  std::vector<int> cached_files;   // sorted 1-based file indices
  Eigen::VectorXi hit;             // K entries in {0, 1}
  Eigen::VectorXd popularity;      // F request probabilities, sums to 1

  int miss_count() const {
    return static_cast<int>(hit.size()) - hit.sum();
  }
};

/// Request probability of file f under the power-law popularity model,
/// f^-rho / sum_i i^-rho.
double zipf_popularity(int f, int num_files, double rho);

/// Caches the cache_capacity most popular files (ties to the lower index)
/// and derives the per-device hit indicators. Deterministic.
CachePlan place_cache(const ScenarioConfig& config);

/// Installs explicit hit indicators, bypassing the popularity rule.
/// Throws std::invalid_argument on length mismatch or non-binary entries.
CachePlan scenario_indicators(const ScenarioConfig& config,
                              const std::vector<int>& pattern);

}  // namespace saginmec
