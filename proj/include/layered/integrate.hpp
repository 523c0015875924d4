#pragma once

#include <vector>

#include "layered/coupling.hpp"
#include "layered/flux.hpp"
#include "layered/reconstruct.hpp"
#include "layered/thermo.hpp"

namespace layered {

/// How z-wall ghost cells get their thermodynamic fields. `balanced` continues
/// each layer's hydrostatic background into the ghost rows and mirrors only the
/// deviation from it; `mirror` copies rho and rho_theta from the image cell.
/// Both flip the wall-normal momentum.
enum class WallGhost { balanced, mirror };

/// Everything the discrete operators need besides the state.
struct SolverSetup {
  PhysicalConstants constants;
  WenoParams weno;
  FluxParams flux;
  CouplingForm coupling = CouplingForm::derived;
  BoundaryKind bc_x = BoundaryKind::wall;
  BoundaryKind bc_z = BoundaryKind::wall;
  WallGhost wall_ghost = WallGhost::balanced;
};

struct StepContext {
  double dt = 0.0;
  double cfl = 0.4;
  double t = 0.0;
  long step_index = 0;

  void validate() const;
};

/// Per-layer tendencies over interior cells, row-major (j * nx + i).
using StackTendency = std::vector<std::vector<State5>>;

/// cfl * h / max(|vel - cs|, |vel + cs|) over all cells and layers, with
/// vel = sqrt(u^2 + w^2) and h = min(dx, dz).
double compute_dt(const LayerStack& stack, const PhysicalConstants& pc, double cfl);

/// Fills one layer's ghost ring for the x-z boundary conditions in `setup`.
/// `background` is the layer's theta_bar, used by WallGhost::balanced.
void fill_layer_ghosts(LayerField& field, const Grid& grid, const ThetaProfile& background,
                       const SolverSetup& setup);

/// Conservation-law operator L for every layer. Layers are independent here;
/// the y-coupling lives in the source operator. `dt` parameterises the FLIC fluxes.
StackTendency spatial_operator(const LayerStack& stack, const SolverSetup& setup, double dt);

/// Coupling plus physical source for every cell column. Adds the number of
/// low-Mach violations seen to `low_mach_violations` when non-null.
StackTendency source_operator(const LayerStack& stack, const SolverSetup& setup,
                              long* low_mach_violations = nullptr);

// Stage combination out = a x + b y + c k, used by rk3_step.
inline void rk_combine(double& out, double a, double x, double b, double y, double c, double k) {
  out = a * x + b * y + c * k;
}
inline void rk_validate(double) {}

void rk_combine(LayerStack& out, double a, const LayerStack& x, double b, const LayerStack& y,
                double c, const StackTendency& k);

/// Throws AdmissibilityError when any interior cell is inadmissible.
void rk_validate(const LayerStack& stack);

/// Three-stage TVD Runge-Kutta (Shu-Osher form).
template <class State, class Op>
State rk3_step(const State& q0, Op&& op, double dt) {
  const auto k0 = op(q0);
  State q1 = q0;
  rk_combine(q1, 1.0, q0, 0.0, q0, dt, k0);
  rk_validate(q1);
  const auto k1 = op(q1);
  State q2 = q0;
  rk_combine(q2, 0.75, q0, 0.25, q1, 0.25 * dt, k1);
  rk_validate(q2);
  const auto k2 = op(q2);
  State q3 = q0;
  rk_combine(q3, 1.0 / 3.0, q0, 2.0 / 3.0, q2, 2.0 / 3.0 * dt, k2);
  rk_validate(q3);
  return q3;
}

/// L(dt): RK3 on the conservation-law operator.
LayerStack conservation_step(const LayerStack& stack, const SolverSetup& setup, double dt);

/// S(dt): RK3 on the source operator.
LayerStack source_step(const LayerStack& stack, const SolverSetup& setup, double dt,
                       long* low_mach_violations = nullptr);

/// S(dt/2) L(dt) S(dt/2).
LayerStack strang_step(const LayerStack& stack, const SolverSetup& setup, double dt,
                       long* low_mach_violations = nullptr);

struct StepResult {
  double dt_used = 0.0;
  int rejections = 0;
  long low_mach_violations = 0;
};

/// Strang step with rejection: an inadmissible intermediate state halves dt and
/// retries, up to `max_retries` times, then throws StepRejected.
StepResult advance(LayerStack& stack, const SolverSetup& setup, double dt, int max_retries = 10);

}  // namespace layered
