#pragma once

namespace fourmode::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double he4_mass = 6.6464731e-27;  // kg

// Bragg momentum condition in velocity units: v_p + v_p' = 50 mm/s.
inline constexpr double mode_velocity_sum = 50.0;  // mm/s
inline constexpr double mm_per_s = 1e-3;           // m/s per mm/s

// 100 us pi pulse -> Omega/2pi = 5 kHz.
inline constexpr double deflector_duration = 100e-6;  // s
inline constexpr double splitter_duration = 50e-6;    // s
inline constexpr double default_rabi = pi / deflector_duration;  // rad/s

}  // namespace fourmode::constants
