#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "layered/grid.hpp"
#include "layered/state.hpp"
#include "layered/thermo.hpp"

namespace layered {

/// Ordered y-layers over a shared x-z grid. Layer k covers
/// [k dy, (k+1) dy] with dy = ly / n_layers.
struct LayerStack {
  Grid grid;
  double ly = 1.0;
  std::vector<LayerField> layers;
  std::vector<ThetaProfile> background;  // theta_bar per layer

  int n_layers() const { return static_cast<int>(layers.size()); }
  double dy() const { return ly / static_cast<double>(layers.size()); }

  /// Empty stack of n layers with ghost rings allocated.
  static LayerStack make(const Grid& grid, double ly, std::vector<ThetaProfile> background);
};

enum class CouplingForm {
  derived,        // -(1/dy)(G_top - G_bottom)
  paper_literal,  // +dy (G_top - G_bottom)
};

std::string_view to_string(CouplingForm form);
CouplingForm parse_coupling_form(std::string_view text);

enum class WallSide { bottom, top };

/// G+(Q) = 1/2 (v + cs/sqrt(gamma)) [rho, rho u, rho (v + cs/sqrt(gamma)), rho w, rho theta].
State5 split_flux_plus(const State5& q, const PhysicalConstants& pc = {});

/// G-(Q) = 1/2 (v - cs/sqrt(gamma)) [rho, rho u, rho (v - cs/sqrt(gamma)), rho w, rho theta].
State5 split_flux_minus(const State5& q, const PhysicalConstants& pc = {});

/// True when |v| < cs/sqrt(gamma), the regime in which the closed-form
/// splitting is derived.
bool splitting_regime_ok(const State5& q, const PhysicalConstants& pc = {});

/// Wall ghost layer: v mirrored, everything else copied.
State5 ghost_layer_state(const State5& q, WallSide side);

/// [0, f rho v, -f rho u, -rho g, 0].
State5 physical_source(const State5& q, const PhysicalConstants& pc = {});

/// Coupling source for every layer of one (i, j) column. Interface fluxes are
/// G+(Q_k) + G-(Q_{k+1}) with ghost layers at both walls. `out` receives one
/// State5 per layer. Returns the number of states that violated the low-Mach
/// regime (the computation proceeds regardless).
int coupling_source(const LayerStack& stack, int i, int j, CouplingForm form,
                    const PhysicalConstants& pc, std::vector<State5>& out);

/// Convenience overload returning the per-layer sources.
std::vector<State5> coupling_source(const LayerStack& stack, int i, int j,
                                    CouplingForm form = CouplingForm::derived,
                                    const PhysicalConstants& pc = {});

/// Same computation on a bare column of layer states.
int coupling_source_column(const std::vector<State5>& column, double dy, CouplingForm form,
                           const PhysicalConstants& pc, std::vector<State5>& out);

}  // namespace layered
