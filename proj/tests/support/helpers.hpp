#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "layered/coupling.hpp"
#include "layered/integrate.hpp"
#include "layered/scalar_advection.hpp"
#include "layered/spatial.hpp"
#include "layered/state.hpp"
#include "layered/thermo.hpp"

namespace testing_support {

using namespace layered;

/// Reproducible random admissible states around the surface reference.
class StateSampler {
 public:
  explicit StateSampler(unsigned seed = 20240611u) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// |v| below `v_fraction` of cs / sqrt(gamma).
  State5 next(const PhysicalConstants& pc = {}, double v_fraction = 0.9) {
    const double rho = uniform(0.3, 1.5);
    const double theta = uniform(250.0, 450.0);
    const double cs = std::sqrt(sound_speed_sq(rho, theta, pc));
    const double vmax = v_fraction * cs / std::sqrt(pc.gamma);
    return from_primitive(rho, uniform(-60.0, 60.0), uniform(-vmax, vmax), uniform(-30.0, 30.0),
                          theta);
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs(const State5& q) {
  double m = 0.0;
  for (std::size_t k = 0; k < State5::size; ++k) m = std::max(m, std::abs(q[k]));
  return m;
}

inline double max_abs_diff(const State5& a, const State5& b) { return max_abs(a - b); }

/// Stack of identical uniform layers.
inline LayerStack uniform_stack(const Grid& grid, int n_layers, const State5& q, double ly = 20000.0) {
  const double theta = q[kRhoTheta] / q[kRho];
  LayerStack s = LayerStack::make(grid, ly, std::vector<ThetaProfile>(n_layers, ThetaProfile::constant(theta)));
  for (LayerField& f : s.layers) {
    for (int j = 0; j < grid.nz; ++j) {
      for (int i = 0; i < grid.nx; ++i) f.at(i, j) = q;
    }
  }
  return s;
}

/// Largest componentwise |a - b| / max(1, |b|) over all interior cells.
inline double max_rel_change(const LayerStack& a, const LayerStack& b) {
  double m = 0.0;
  for (int k = 0; k < a.n_layers(); ++k) {
    for (int j = 0; j < a.grid.nz; ++j) {
      for (int i = 0; i < a.grid.nx; ++i) {
        const State5& qa = a.layers[k].at(i, j);
        const State5& qb = b.layers[k].at(i, j);
        for (std::size_t c = 0; c < State5::size; ++c) {
          m = std::max(m, std::abs(qa[c] - qb[c]) / std::max(1.0, std::abs(qb[c])));
        }
      }
    }
  }
  return m;
}

/// Runs `steps` adaptive Strang steps; returns the simulated time.
inline double run_steps(LayerStack& stack, const SolverSetup& setup, double cfl, int steps) {
  double t = 0.0;
  for (int n = 0; n < steps; ++n) {
    const double dt = compute_dt(stack, setup.constants, cfl);
    t += advance(stack, setup, dt).dt_used;
  }
  return t;
}

/// Runs adaptive Strang steps until t >= t_end, starting from t.
inline double run_until(LayerStack& stack, const SolverSetup& setup, double cfl, double t,
                        double t_end) {
  while (t < t_end) {
    const double dt = compute_dt(stack, setup.constants, cfl);
    t += advance(stack, setup, dt).dt_used;
  }
  return t;
}

/// Copies a periodic 1D profile into an nx-by-1 scalar field and fills ghosts.
inline Field<1> scalar_row(const std::vector<double>& u, BoundaryKind bc_x) {
  Field<1> f(static_cast<int>(u.size()), 1);
  for (std::size_t i = 0; i < u.size(); ++i) f.at(static_cast<int>(i), 0) = Vec<1>{{u[i]}};
  fill_ghosts(f, bc_x, BoundaryKind::wall, [](const Vec<1>& q, Axis) { return q; });
  return f;
}

/// One RK3 step of the library's scalar operator on a periodic row.
inline std::vector<double> library_scalar_rk3(const std::vector<double>& u, double a, double h,
                                              double dt) {
  const ScalarAdvection sys{a, 0.0};
  const Grid grid{static_cast<int>(u.size()), 1, 0.0, 0.0, h, h};
  auto op = [&](const std::vector<double>& v) {
    const Field<1> f = scalar_row(v, BoundaryKind::periodic);
    const auto t = spatial_operator(sys, f, grid, BoundaryKind::periodic, BoundaryKind::wall,
                                    WenoParams{}, FluxParams{}, dt);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = t[i][0];
    return out;
  };
  std::vector<double> u1(u.size()), u2(u.size()), u3(u.size());
  const auto k0 = op(u);
  for (std::size_t i = 0; i < u.size(); ++i) u1[i] = u[i] + dt * k0[i];
  const auto k1 = op(u1);
  for (std::size_t i = 0; i < u.size(); ++i) u2[i] = 0.75 * u[i] + 0.25 * u1[i] + 0.25 * dt * k1[i];
  const auto k2 = op(u2);
  for (std::size_t i = 0; i < u.size(); ++i) u3[i] = u[i] / 3.0 + 2.0 / 3.0 * u2[i] + 2.0 / 3.0 * dt * k2[i];
  return u3;
}

}  // namespace testing_support
