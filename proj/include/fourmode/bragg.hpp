#pragma once

#include "fourmode/constants.hpp"
#include "fourmode/linalg.hpp"

namespace fourmode {

enum class PulseRole { deflector, splitter, custom };

/// One square Bragg pulse: constant two-photon Rabi frequency over the pulse
/// duration, lattice phase = phase difference of the two beams.
struct BraggPulse {
  double rabi_frequency = constants::default_rabi;  // rad/s
  double duration = constants::deflector_duration;  // s
  double lattice_phase = 0.0;                       // rad
  PulseRole role = PulseRole::custom;

  double area() const { return rabi_frequency * duration; }

  /// Throws std::invalid_argument on invalid fields or a role/area mismatch.
  void validate() const;

  static BraggPulse deflector(double rabi = constants::default_rabi, double phase = 0.0);
  static BraggPulse splitter(double rabi = constants::default_rabi, double phase = 0.0);
};

/// Two-mode evolution for a resonant pulse:
///   [[cos(Wt/2), -i e^{-i phi} sin(Wt/2)], [-i e^{i phi} sin(Wt/2), cos(Wt/2)]]
Mat2 resonant_unitary(const BraggPulse& pulse);

/// Detuned pulse keeping only the accumulated relative phase (first order in
/// delta/Omega): diagonal e^{-+ i delta t/2} cos(Wt/2), off-diagonal
/// -i e^{-+ i(phi + delta t/2)} sin(Wt/2). For the swapped mode pair the
/// caller passes -delta.
Mat2 detuned_unitary_first_order(const BraggPulse& pulse, double delta);

/// Exact constant-coupling evolution in the frame where the mode energies stay
/// on their bare values (the drive carries the detuning phase): generalized
/// Rabi flopping at W_e = sqrt(W^2 + delta^2), off-diagonal phases identical
/// to the first-order form, and delta -> 0 reduces to resonant_unitary.
Mat2 detuned_unitary_exact(const BraggPulse& pulse, double delta);

}  // namespace fourmode
