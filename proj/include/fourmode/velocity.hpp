#pragma once

namespace fourmode {

/// Velocity in mm/s, center-of-mass frame; z is the lattice axis.
struct Velocity {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

}  // namespace fourmode
