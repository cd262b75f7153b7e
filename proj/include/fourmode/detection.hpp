#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fourmode/source.hpp"
#include "fourmode/velocity.hpp"

namespace fourmode {

struct DetectorConfig {
  double efficiency = 0.25;
  Velocity resolution_sigma{0.3, 0.3, 0.15};  // mm/s

  void validate() const;
};

enum class VolumeShape { rectangular, cylindrical_z };

/// Closed counting region in velocity space. extent holds the full sizes
/// (dx, dy, dz); cylinders are z-oriented with diameter dx = dy and length dz.
struct IntegrationVolume {
  VolumeShape shape = VolumeShape::cylindrical_z;
  Velocity center{};
  Velocity extent{};

  bool contains(const Velocity& v) const;
  IntegrationVolume at(const Velocity& c) const;  // same geometry, new center
  void validate() const;
};

enum class PaperFigure { fig2, fig3, fig4, fig_s1_left, fig_s1_right, fig_s3 };

/// Published counting geometries, centered at the origin.
IntegrationVolume table_s1_volume(PaperFigure figure);

struct Shot {
  std::vector<Velocity> atoms;
};

struct DatasetMeta {
  std::uint64_t master_seed = 0;
  std::string config_digest;
  std::size_t shot_count = 0;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<Shot> shots;
};

/// Independent thinning at the detector efficiency plus Gaussian velocity
/// smearing of the kept atoms. Deterministic in seed.
Shot detect(const EmissionEvent& event, const DetectorConfig& config, std::uint64_t seed);

/// Number of atoms inside the closed region.
int count(const Shot& shot, const IntegrationVolume& volume);

/// Newline-delimited text: one header line, then one record per shot holding
/// the shot index and a flat (vx vy vz)* list. Round-trips bit-exactly.
void save_dataset(const Dataset& dataset, std::ostream& out);
void save_dataset(const Dataset& dataset, const std::string& path);
Dataset load_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);

}  // namespace fourmode
