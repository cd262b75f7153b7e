#pragma once

#include <stdexcept>
#include <string>

namespace fourmode {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Estimator normalization vanished (no coincidences) or too few data.
struct StatisticsError : std::runtime_error {
  explicit StatisticsError(const std::string& what) : std::runtime_error(what) {}
};

struct FitError : std::runtime_error {
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fourmode
