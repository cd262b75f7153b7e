#pragma once

#include <cstdint>
#include <vector>

#include "fourmode/detection.hpp"
#include "fourmode/interferometer.hpp"
#include "fourmode/source.hpp"

namespace fourmode {

enum class RunMode { source_only, interferometer };

/// Bragg optics settings for Monte Carlo runs. The splitter timing enters as
/// a Gaussian wave-packet overlap that scales the pair coherence; at
/// splitter_time_us == closing_time_us the interferometer is closed.
struct InterferometerConfig {
  double rabi = constants::default_rabi;  // rad/s
  PhaseSettings phases{};
  DetuningMethod method = DetuningMethod::exact;
  double splitter_time_us = 1950.0;
  double closing_time_us = 1950.0;
  double overlap_sigma_us = 150.0;

  double overlap() const;
  PulsePair pulses() const;
};

struct SimConfig {
  SourceConfig source;
  DetectorConfig detector;
  InterferometerConfig interferometer;
  RunMode mode = RunMode::interferometer;
};

/// Per-mode-set output-port law, cached once per run. Tagged pairs draw their
/// exit ports from the analytic joint probabilities of their set (the
/// degenerate set follows the shared-splitter two-port law) and the atoms are
/// recorded at the port velocities with their emission jitter carried over.
struct RoutingTable {
  struct Entry {
    bool degenerate = false;
    double cumulative[4] = {0, 0, 0, 0};  // cdf over (A+B+, A+B-, A-B+, A-B-)
    double hom_same_plus = 0.0;           // cdf: both atoms up
    double hom_same_minus = 0.0;          // cdf: both atoms down
    double v_p = 0.0;
    double v_pprime = 0.0;
  };
  std::vector<Entry> entries;  // parallel to mode_grid(config.source)
};

RoutingTable build_routing(const SimConfig& config);

/// Emission -> optional interferometer routing -> detection for one shot.
Shot simulate_shot(const SimConfig& config, const RoutingTable& routing, std::uint64_t master_seed,
                   std::uint64_t shot_index);

/// Parallel (OpenMP) dataset generation; byte-identical to the serial
/// reference for any worker count.
Dataset simulate_dataset(const SimConfig& config, std::size_t shots, std::uint64_t master_seed);

/// Serial reference implementation kept for testing and benchmarking.
Dataset simulate_dataset_serial(const SimConfig& config, std::size_t shots,
                                std::uint64_t master_seed);

/// Caps OpenMP worker count (0 keeps the runtime default).
void set_worker_count(int workers);

struct GainCalibration {
  double gain;                  // mean_pairs_per_mode hitting the target
  double occupancy;             // corrected atoms per volume at that gain
  double detected_pair_density; // detected pairs per (mm/s)^3 at the peak
};

/// Tunes source.mean_pairs_per_mode until the efficiency-corrected mean atom
/// number in the v_p-side counting volume of the given set matches target.
GainCalibration calibrate_gain(SimConfig config, const ModeSet& set, double target,
                               std::size_t shots, std::uint64_t master_seed);

}  // namespace fourmode
