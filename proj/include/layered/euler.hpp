#pragma once

#include "layered/grid.hpp"
#include "layered/state.hpp"
#include "layered/thermo.hpp"

namespace layered {

/// Physical flux of the inviscid system along x (F), y (G) or z (H).
State5 physical_flux(const State5& q, Axis axis, const PhysicalConstants& pc = {});

/// Wall image of a state: normal momentum negated, everything else copied.
State5 mirror_state(const State5& q, Axis axis);

/// The x-z Euler system seen by the centred flux machinery.
struct EulerSystem {
  using State = State5;
  PhysicalConstants constants;

  State5 flux(const State5& q, Axis axis) const { return physical_flux(q, axis, constants); }
  /// Total energy per unit mass drives the flow parameter.
  double limiter_indicator(const State5& q, double z) const {
    return total_energy(q, z, constants);
  }
  /// |velocity along axis| + sound speed.
  double signal_speed(const State5& q, Axis axis) const;
  State5 mirror(const State5& q, Axis axis) const { return mirror_state(q, axis); }
  bool admissible(const State5& q) const { return layered::admissible(q); }
};

}  // namespace layered
