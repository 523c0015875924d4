#pragma once

#include <cmath>

#include "layered/grid.hpp"
#include "layered/state.hpp"

namespace layered {

/// Linear advection q_t + a_x q_x + a_z q_z = 0. A one-component system that
/// reduces the x-z machinery to the scalar case; walls copy the state.
struct ScalarAdvection {
  using State = Vec<1>;
  double ax = 1.0;
  double az = 0.0;

  State flux(const State& q, Axis axis) const {
    return State{{(axis == Axis::z ? az : (axis == Axis::x ? ax : 0.0)) * q[0]}};
  }
  double limiter_indicator(const State& q, double) const { return q[0]; }
  double signal_speed(const State&, Axis axis) const {
    return std::abs(axis == Axis::z ? az : (axis == Axis::x ? ax : 0.0));
  }
  State mirror(const State& q, Axis) const { return q; }
  bool admissible(const State& q) const { return std::isfinite(q[0]); }
};

}  // namespace layered
