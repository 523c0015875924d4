#include "layered/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "layered/euler.hpp"
#include "layered/spatial.hpp"

namespace layered {

void StepContext::validate() const {
  if (!(dt > 0.0)) throw ConfigError("StepContext: dt must be > 0");
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("StepContext: cfl must lie in (0, 1)");
}

double compute_dt(const LayerStack& stack, const PhysicalConstants& pc, double cfl) {
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1)");
  double max_speed = 0.0;
  for (const LayerField& layer : stack.layers) {
    for (int j = 0; j < stack.grid.nz; ++j) {
      for (int i = 0; i < stack.grid.nx; ++i) {
        const State5& q = layer.at(i, j);
        if (!admissible(q)) {
          throw AdmissibilityError("compute_dt: non-finite or inadmissible state at (" +
                                   std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        const double u = q[kRhoU] / q[kRho];
        const double w = q[kRhoW] / q[kRho];
        const double vel = std::sqrt(u * u + w * w);
        const double cs = std::sqrt(sound_speed_sq(q[kRho], q[kRhoTheta] / q[kRho], pc));
        max_speed = std::max({max_speed, std::abs(vel - cs), std::abs(vel + cs)});
      }
    }
  }
  const double h = std::min(stack.grid.dx, stack.grid.dz);
  return cfl * h / max_speed;
}

void fill_layer_ghosts(LayerField& field, const Grid& grid, const ThetaProfile& background,
                       const SolverSetup& setup) {
  fill_ghosts(field, setup.bc_x, setup.bc_z,
              [](const State5& q, Axis axis) { return mirror_state(q, axis); });
  if (setup.bc_z != BoundaryKind::wall || setup.wall_ghost != WallGhost::balanced) return;

  const PhysicalConstants& pc = setup.constants;
  const int nz = field.nz();
  const int g = field.ghost();
  for (int j = -g; j < nz + g; ++j) {
    if (j >= 0 && j < nz) continue;
    const GhostSource src = ghost_source(j, nz, BoundaryKind::wall);
    const double z_ghost = grid.z_center(j);
    const double z_src = grid.z_center(src.index);
    const double rho_ghost = hydrostatic_profile(background, z_ghost, pc).rho;
    const double rho_src = hydrostatic_profile(background, z_src, pc).rho;
    const double theta_ghost = background.theta(z_ghost, pc);
    const double theta_src = background.theta(z_src, pc);
    for (int i = -g; i < field.nx() + g; ++i) {
      const State5& q = field.at(i, src.index);
      const double rho = rho_ghost + (q[kRho] - rho_src);
      const double theta = theta_ghost + (q[kRhoTheta] / q[kRho] - theta_src);
      const double sign = src.mirrored ? -1.0 : 1.0;
      field.at(i, j) = from_primitive(rho, q[kRhoU] / q[kRho], q[kRhoV] / q[kRho],
                                      sign * q[kRhoW] / q[kRho], theta);
    }
  }
}

StackTendency spatial_operator(const LayerStack& stack, const SolverSetup& setup, double dt) {
  const EulerSystem sys{setup.constants};
  StackTendency out(stack.layers.size());
  for (std::size_t k = 0; k < stack.layers.size(); ++k) {
    LayerField work = stack.layers[k];
    fill_layer_ghosts(work, stack.grid, stack.background[k], setup);
    try {
      out[k] = spatial_operator(sys, work, stack.grid, setup.bc_x, setup.bc_z, setup.weno,
                                setup.flux, dt);
    } catch (const AdmissibilityError& e) {
      throw AdmissibilityError(std::string(e.what()) + " in layer " + std::to_string(k + 1));
    }
  }
  return out;
}

StackTendency source_operator(const LayerStack& stack, const SolverSetup& setup,
                              long* low_mach_violations) {
  const int nx = stack.grid.nx;
  const int nz = stack.grid.nz;
  const std::size_t n_layers = stack.layers.size();
  StackTendency out(n_layers, std::vector<State5>(static_cast<std::size_t>(nx) * nz));
  std::vector<State5> column(n_layers);
  std::vector<State5> coupling;
  long violations = 0;
  const double dy = stack.dy();
  for (int j = 0; j < nz; ++j) {
    for (int i = 0; i < nx; ++i) {
      for (std::size_t k = 0; k < n_layers; ++k) column[k] = stack.layers[k].at(i, j);
      violations += coupling_source_column(column, dy, setup.coupling, setup.constants, coupling);
      const std::size_t idx = static_cast<std::size_t>(j) * nx + i;
      for (std::size_t k = 0; k < n_layers; ++k) {
        out[k][idx] = coupling[k] + physical_source(column[k], setup.constants);
      }
    }
  }
  if (low_mach_violations != nullptr) *low_mach_violations += violations;
  return out;
}

void rk_combine(LayerStack& out, double a, const LayerStack& x, double b, const LayerStack& y,
                double c, const StackTendency& k) {
  const int nx = x.grid.nx;
  const int nz = x.grid.nz;
  for (std::size_t l = 0; l < x.layers.size(); ++l) {
    for (int j = 0; j < nz; ++j) {
      for (int i = 0; i < nx; ++i) {
        const State5& xs = x.layers[l].at(i, j);
        const State5& ys = y.layers[l].at(i, j);
        const State5& ks = k[l][static_cast<std::size_t>(j) * nx + i];
        State5& o = out.layers[l].at(i, j);
        for (std::size_t v = 0; v < 5; ++v) o[v] = a * xs[v] + b * ys[v] + c * ks[v];
      }
    }
  }
}

void rk_validate(const LayerStack& stack) {
  for (std::size_t l = 0; l < stack.layers.size(); ++l) {
    for (int j = 0; j < stack.grid.nz; ++j) {
      for (int i = 0; i < stack.grid.nx; ++i) {
        if (!admissible(stack.layers[l].at(i, j))) {
          throw AdmissibilityError("inadmissible stage state in layer " + std::to_string(l + 1) +
                                   " at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }
}

LayerStack conservation_step(const LayerStack& stack, const SolverSetup& setup, double dt) {
  return rk3_step(
      stack, [&](const LayerStack& s) { return spatial_operator(s, setup, dt); }, dt);
}

LayerStack source_step(const LayerStack& stack, const SolverSetup& setup, double dt,
                       long* low_mach_violations) {
  return rk3_step(
      stack, [&](const LayerStack& s) { return source_operator(s, setup, low_mach_violations); },
      dt);
}

LayerStack strang_step(const LayerStack& stack, const SolverSetup& setup, double dt,
                       long* low_mach_violations) {
  LayerStack s = source_step(stack, setup, 0.5 * dt, low_mach_violations);
  s = conservation_step(s, setup, dt);
  return source_step(s, setup, 0.5 * dt, low_mach_violations);
}

StepResult advance(LayerStack& stack, const SolverSetup& setup, double dt, int max_retries) {
  StepResult result;
  double trial = dt;
  for (int attempt = 0;; ++attempt) {
    try {
      long violations = 0;
      LayerStack next = strang_step(stack, setup, trial, &violations);
      stack = std::move(next);
      result.dt_used = trial;
      result.low_mach_violations = violations;
      return result;
    } catch (const AdmissibilityError& e) {
      if (attempt >= max_retries) {
        throw StepRejected("step rejected after " + std::to_string(max_retries) +
                           " retries: " + e.what());
      }
      ++result.rejections;
      trial *= 0.5;
    }
  }
}

}  // namespace layered
