#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourmode/simulation.hpp"

namespace fourmode {

/// Full experiment description as read from / written to the JSON config
/// file. All physical quantities carry their unit in the key name.
struct ExperimentConfig {
  SimConfig sim;
  std::vector<double> mode_set_velocities{27.0, 29.1, 31.1};  // v_p, mm/s
  std::size_t shots = 2218;
  std::uint64_t master_seed = 20170516;
  std::string output_dir = "out";
  std::string format = "csv";  // csv | json

  void validate() const;  // throws ConfigError
  std::vector<ModeSet> mode_sets() const;
};

ExperimentConfig default_config();

std::string to_json(const ExperimentConfig& config);
ExperimentConfig from_json(const std::string& text);  // throws ConfigError

ExperimentConfig load_config(const std::string& path);          // throws ConfigError / IoError
void save_config(const ExperimentConfig& config, const std::string& path);

/// FNV-1a hash (16 hex digits) of the canonical JSON form; identifies the
/// fully resolved configuration in every artifact.
std::string config_digest(const ExperimentConfig& config);

}  // namespace fourmode
