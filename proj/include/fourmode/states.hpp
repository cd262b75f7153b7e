#pragma once

#include <array>

#include "fourmode/linalg.hpp"

namespace fourmode {

/// Two-particle density operator over the ordered product basis x (x) y with
/// x in {p, -p'} (splitter-A side, outputs {A+, A-}) and y in {p', -p}
/// (splitter-B side, outputs {B+, B-}):
///   index 0: (p , p'),  1: (p , -p),  2: (-p', p'),  3: (-p', -p)
/// After the optics the same indices read (A+B+, A+B-, A-B+, A-B-).
struct TwoParticleState {
  Mat4 rho;

  /// Hermitian to 1e-12, trace 1 to 1e-12, eigenvalues >= -1e-10.
  void validate() const;
  double purity() const;  // Tr(rho^2)
};

/// Pure projector onto (|p,-p> + |p',-p'>)/sqrt(2), i.e. the vector
/// (0, 1, 1, 0)/sqrt(2) in the basis above.
TwoParticleState bell_input_state();

/// Even statistical mixture of |p,-p> and |p',-p'>.
TwoParticleState mixed_input_state();

/// Superposition with amplitudes (1, sqrt(w))/sqrt(1+w) between the two pair
/// branches; w = 1 reproduces bell_input_state.
TwoParticleState weighted_bell_state(double weight);

/// coherence * bell + (1 - coherence) * mixed. Doubles as the partial-overlap
/// two-boson state at a single splitter (coherence = overlap).
TwoParticleState blended_input_state(double coherence);

}  // namespace fourmode
