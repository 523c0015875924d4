#pragma once

#include <vector>

#include "layered/coupling.hpp"
#include "layered/thermo.hpp"

namespace layered {

/// Per-audit totals and per-layer extrema over interior cells. Extensive
/// quantities integrate over dx dz dy of every layer.
struct DiagnosticsRecord {
  double t = 0.0;
  double total_mass = 0.0;
  double total_energy = 0.0;  // sum of energy_per_layer
  std::vector<double> energy_per_layer;
  std::vector<double> theta_min;
  std::vector<double> theta_max;
  std::vector<double> u_min;
  std::vector<double> u_max;
  double max_abs_residual_theta = 0.0;  // max |theta_k - theta_{k+1}| over cells
};

DiagnosticsRecord audit(const LayerStack& stack, double t, const PhysicalConstants& pc = {});

/// Volume integrals of each conserved component, summed over layers.
State5 conserved_totals(const LayerStack& stack);

/// max |theta(x) - theta(-x)| of one layer, pairing cell i with nx-1-i.
double theta_x_asymmetry(const LayerStack& stack, int layer);

/// Height of the theta maximum of one layer: parabolic peak fit through the
/// maximising cell and its vertical neighbours.
double theta_peak_height(const LayerStack& stack, int layer);

/// Potential temperature of every interior cell of a layer, row-major.
std::vector<double> theta_field(const LayerStack& stack, int layer);

}  // namespace layered
