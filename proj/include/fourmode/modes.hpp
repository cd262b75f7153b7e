#pragma once

namespace fourmode {

/// A Bragg-coupled velocity pair (v_p, v_p') with v_p + v_p' = 50 mm/s.
/// detuning is the kinetic-energy mismatch m(v_p^2 - v_p'^2)/(2 hbar) > 0
/// for v_p > 25 mm/s.
struct ModeSet {
  double v_p;       // mm/s, > 25
  double v_pprime;  // mm/s, < 25
  double detuning;  // rad/s
  int label = 0;

  void validate() const;
};

/// m(v_p^2 - v_p'^2)/(2 hbar); throws std::invalid_argument unless
/// v_p + v_p' = 50 mm/s within 1e-6.
double detuning_from_velocities(double v_p, double v_pprime);

/// Builds the set from the upper velocity; the partner is 50 - v_p.
ModeSet make_mode_set(double v_p, int label = 0);

}  // namespace fourmode
