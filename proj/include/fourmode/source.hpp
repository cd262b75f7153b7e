#pragma once

#include <cstdint>
#include <vector>

#include "fourmode/modes.hpp"
#include "fourmode/states.hpp"
#include "fourmode/velocity.hpp"

namespace fourmode {

enum class Coherence { entangled, mixed };

/// Phenomenological pair source: discrete longitudinal mode sets (v, 50-v)
/// around 25 mm/s, thermal pair occupation per set with a Gaussian gain
/// envelope, Gaussian placement jitter, plus a broad uncorrelated halo that
/// sets the g2 pedestal.
struct SourceConfig {
  double com_velocity[3] = {0.0, 0.0, 94.0};  // mm/s, lab frame; bookkeeping only
  double mode_center = 25.0;                  // mm/s
  double sigma_long = 9.0;                    // mm/s, gain envelope over mode centers
  double sigma_short = 2.7;                   // mm/s, expected pair-sum correlation width
  double sigma_auto = 1.9;                    // mm/s, per-atom mode jitter
  double transverse_sigma = 0.8;              // mm/s, pair transverse spread
  double mean_pairs_per_mode = 0.11;          // peak thermal gain
  int n_modes = 27;                           // mode sets across the band
  Coherence coherence = Coherence::entangled;
  double asymmetry = 1.0;  // keep probability for pairs born in the lower (v < 25) branch

  // Uncorrelated halo: uniform along z over mode_center +- half width (both
  // signs), broad transversely so it stays out of the small counting volumes.
  double background_rate = 90.0;             // mean true atoms per shot
  double background_half_width = 20.0;       // mm/s
  double background_transverse_sigma = 8.0;  // mm/s

  void validate() const;  // throws std::invalid_argument
};

struct PairTag {
  int first_atom;   // index of the v > 0 atom
  int second_atom;  // index of the v < 0 atom
  int mode_index;   // position in mode_grid
  bool lower_branch;  // pair materialized at (v_p', -v_p') rather than (v_p, -v_p)
};

struct EmissionEvent {
  std::vector<Velocity> atoms;
  std::vector<PairTag> pairs;  // background atoms carry no tag
};

/// Mode-set centers v_p >= mode_center, uniform over
/// [mode_center, mode_center + 2 sigma_long / sqrt(2)].
std::vector<double> mode_grid(const SourceConfig& config);

/// One emission in the center-of-mass frame. Deterministic in (config, seed).
EmissionEvent sample_shot(const SourceConfig& config, std::uint64_t seed);

/// Input state of one mode set for the analytic pipeline: Bell-like
/// superposition (weighted by asymmetry) when entangled, even mixture when
/// mixed. Throws std::invalid_argument for sets outside the emission band.
TwoParticleState two_particle_state_for(const ModeSet& set, const SourceConfig& config);

}  // namespace fourmode
