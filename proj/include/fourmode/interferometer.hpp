#pragma once

#include <functional>

#include "fourmode/bragg.hpp"
#include "fourmode/modes.hpp"
#include "fourmode/states.hpp"

namespace fourmode {

/// Lattice phases of the deflecting pulse and the two splitting pulses.
struct PhaseSettings {
  double deflector = 0.0;   // phi_D, rad
  double splitter_a = 0.0;  // phi_A
  double splitter_b = 0.0;  // phi_B
};

/// The deflector/splitter pulse pair applied on both interferometer arms.
struct PulsePair {
  BraggPulse deflector;
  BraggPulse splitter;

  static PulsePair standard(double rabi = constants::default_rabi);
};

enum class DetuningMethod { resonant, first_order, exact };

struct JointProbabilities {
  double p_pp = 0.0;  // (A+, B+)
  double p_mm = 0.0;  // (A-, B-)
  double p_pm = 0.0;  // (A+, B-)
  double p_mp = 0.0;  // (A-, B+)

  double sum() const { return p_pp + p_mm + p_pm + p_mp; }
};

/// splitter * deflector; maps (p, -p') to (A+, A-), or (p', -p) to (B+, B-).
/// Throws std::invalid_argument if either factor fails the unitarity check.
Mat2 interferometer_transform(const Mat2& deflector, const Mat2& splitter);

/// Single-side transform for one mode pair. delta is the set's detuning for
/// the (p, -p') side; callers pass -delta for the (p', -p) side.
Mat2 side_transform(const PulsePair& pulses, double phase_deflector, double phase_splitter,
                    double delta, DetuningMethod method);

/// (T_A (x) T_B) rho (T_A (x) T_B)†; throws on non-unitary transforms.
TwoParticleState propagate(const TwoParticleState& state, const Mat2& t_a, const Mat2& t_b);

/// Diagonal of the output state in the (A+-, B+-) basis.
JointProbabilities joint_probabilities(const TwoParticleState& state_out);

/// E = P(A+,B+) + P(A-,B-) - P(A+,B-) - P(A-,B+).
double correlation_E(const JointProbabilities& probs);

/// Marginal single-detection probabilities {P(A+), P(A-), P(B+), P(B-)}.
std::array<double, 4> single_detection_probabilities(const TwoParticleState& state_out);

/// Full analytic chain for one mode set: input state with the given branch
/// coherence/weight, detuned optics on both sides, output probabilities.
JointProbabilities mode_set_probabilities(const ModeSet& set, const PulsePair& pulses,
                                          const PhaseSettings& phases, DetuningMethod method,
                                          double coherence = 1.0, double bell_weight = 1.0);

/// Fringe E(dphi) ~ dc + visibility * cos(dphi + offset) extracted from a
/// uniform scan of phi_A at phi_B = 0.
struct FringeCharacter {
  double offset;      // rad, additive shift of (phi_A - phi_B)
  double visibility;  // first-harmonic amplitude
  double dc;
};

FringeCharacter characterize_fringe(const ModeSet& set, const PulsePair& pulses,
                                    DetuningMethod method, int n_points = 720);

/// Additive fringe offset for the set. FirstOrder returns -2 pi delta / Omega
/// directly; Exact extracts the fringe shift from a phase scan and throws
/// FitError when the fringe visibility is below 1e-6.
double phase_offset(const ModeSet& set, const PulsePair& pulses, DetuningMethod method);

/// Probability that the two atoms of a degenerate pair leave by different
/// ports after the shared splitter: reads P(+,-) + P(-,+) off the propagated
/// state. 0 for perfect bosonic overlap, 1/2 for distinguishable particles.
double hom_joint_probability(const TwoParticleState& state_out);

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh_value(const std::function<double(double, double)>& correlation, double a,
                  double a_prime, double b, double b_prime);

}  // namespace fourmode
