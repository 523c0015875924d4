#include "layered/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace layered {

DiagnosticsRecord audit(const LayerStack& stack, double t, const PhysicalConstants& pc) {
  const Grid& g = stack.grid;
  const std::size_t n = stack.layers.size();
  const double volume = g.dx * g.dz * stack.dy();
  DiagnosticsRecord rec;
  rec.t = t;
  rec.energy_per_layer.assign(n, 0.0);
  rec.theta_min.assign(n, std::numeric_limits<double>::infinity());
  rec.theta_max.assign(n, -std::numeric_limits<double>::infinity());
  rec.u_min.assign(n, std::numeric_limits<double>::infinity());
  rec.u_max.assign(n, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < n; ++k) {
    const LayerField& layer = stack.layers[k];
    double mass = 0.0;
    double energy = 0.0;
    for (int j = 0; j < g.nz; ++j) {
      const double z = g.z_center(j);
      for (int i = 0; i < g.nx; ++i) {
        const State5& q = layer.at(i, j);
        mass += q[kRho];
        energy += q[kRho] * total_energy(q, z, pc);
        const double theta = q[kRhoTheta] / q[kRho];
        const double u = q[kRhoU] / q[kRho];
        rec.theta_min[k] = std::min(rec.theta_min[k], theta);
        rec.theta_max[k] = std::max(rec.theta_max[k], theta);
        rec.u_min[k] = std::min(rec.u_min[k], u);
        rec.u_max[k] = std::max(rec.u_max[k], u);
        if (k + 1 < n) {
          const State5& p = stack.layers[k + 1].at(i, j);
          rec.max_abs_residual_theta =
              std::max(rec.max_abs_residual_theta, std::abs(theta - p[kRhoTheta] / p[kRho]));
        }
      }
    }
    rec.total_mass += mass * volume;
    rec.energy_per_layer[k] = energy * volume;
  }
  for (double e : rec.energy_per_layer) rec.total_energy += e;
  return rec;
}

State5 conserved_totals(const LayerStack& stack) {
  const Grid& g = stack.grid;
  const double volume = g.dx * g.dz * stack.dy();
  State5 sum{};
  for (const LayerField& layer : stack.layers) {
    for (int j = 0; j < g.nz; ++j) {
      for (int i = 0; i < g.nx; ++i) sum += layer.at(i, j);
    }
  }
  return volume * sum;
}

std::vector<double> theta_field(const LayerStack& stack, int layer) {
  const Grid& g = stack.grid;
  std::vector<double> out(static_cast<std::size_t>(g.nx) * g.nz);
  const LayerField& f = stack.layers.at(static_cast<std::size_t>(layer));
  for (int j = 0; j < g.nz; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const State5& q = f.at(i, j);
      out[static_cast<std::size_t>(j) * g.nx + i] = q[kRhoTheta] / q[kRho];
    }
  }
  return out;
}

double theta_x_asymmetry(const LayerStack& stack, int layer) {
  const Grid& g = stack.grid;
  const std::vector<double> th = theta_field(stack, layer);
  double worst = 0.0;
  for (int j = 0; j < g.nz; ++j) {
    for (int i = 0; i < g.nx / 2; ++i) {
      const double a = th[static_cast<std::size_t>(j) * g.nx + i];
      const double b = th[static_cast<std::size_t>(j) * g.nx + (g.nx - 1 - i)];
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return worst;
}

double theta_peak_height(const LayerStack& stack, int layer) {
  const Grid& g = stack.grid;
  const std::vector<double> th = theta_field(stack, layer);
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < th.size(); ++idx) {
    if (th[idx] > th[best]) best = idx;
  }
  const int i = static_cast<int>(best % static_cast<std::size_t>(g.nx));
  const int j = static_cast<int>(best / static_cast<std::size_t>(g.nx));
  const double zc = g.z_center(j);
  if (j == 0 || j == g.nz - 1) return zc;
  const double below = th[static_cast<std::size_t>(j - 1) * g.nx + i];
  const double mid = th[best];
  const double above = th[static_cast<std::size_t>(j + 1) * g.nx + i];
  const double curvature = below - 2.0 * mid + above;
  if (!(curvature < 0.0)) return zc;
  const double offset = 0.5 * (below - above) / curvature;
  return zc + std::clamp(offset, -0.5, 0.5) * g.dz;
}

}  // namespace layered
