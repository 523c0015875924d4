#include "layered/coupling.hpp"

#include <cmath>
#include <string>

#include "layered/errors.hpp"

namespace layered {

LayerStack LayerStack::make(const Grid& grid, double ly, std::vector<ThetaProfile> background) {
  if (background.empty()) throw ConfigError("LayerStack needs at least one layer");
  if (!(ly > 0.0)) throw ConfigError("LayerStack: Ly must be positive");
  LayerStack s;
  s.grid = grid;
  s.ly = ly;
  s.background = std::move(background);
  s.layers.assign(s.background.size(), LayerField(grid.nx, grid.nz));
  return s;
}

std::string_view to_string(CouplingForm form) {
  return form == CouplingForm::derived ? "derived" : "paper_literal";
}

CouplingForm parse_coupling_form(std::string_view text) {
  if (text == "derived") return CouplingForm::derived;
  if (text == "paper_literal") return CouplingForm::paper_literal;
  throw ConfigError("invalid coupling_form '" + std::string(text) +
                    "'; valid: {derived, paper_literal}");
}

namespace {

struct SplitInputs {
  double v;
  double c_over_sqrt_gamma;
};

SplitInputs split_inputs(const State5& q, const PhysicalConstants& pc) {
  if (!admissible(q)) throw AdmissibilityError("split flux: inadmissible state");
  const double rho = q[kRho];
  const double theta = q[kRhoTheta] / rho;
  const double cs = std::sqrt(sound_speed_sq(rho, theta, pc));
  return {q[kRhoV] / rho, cs / std::sqrt(pc.gamma)};
}

State5 split_flux(const State5& q, double speed) {
  const double a = 0.5 * speed;
  return State5{{a * q[kRho], a * q[kRhoU], a * q[kRho] * speed, a * q[kRhoW], a * q[kRhoTheta]}};
}

}  // namespace

State5 split_flux_plus(const State5& q, const PhysicalConstants& pc) {
  const SplitInputs s = split_inputs(q, pc);
  return split_flux(q, s.v + s.c_over_sqrt_gamma);
}

State5 split_flux_minus(const State5& q, const PhysicalConstants& pc) {
  const SplitInputs s = split_inputs(q, pc);
  return split_flux(q, s.v - s.c_over_sqrt_gamma);
}

bool splitting_regime_ok(const State5& q, const PhysicalConstants& pc) {
  const SplitInputs s = split_inputs(q, pc);
  return std::abs(s.v) < s.c_over_sqrt_gamma;
}

State5 ghost_layer_state(const State5& q, WallSide) {
  State5 out = q;
  out[kRhoV] = -out[kRhoV];
  return out;
}

State5 physical_source(const State5& q, const PhysicalConstants& pc) {
  return State5{{0.0, pc.f * q[kRhoV], -pc.f * q[kRhoU], -q[kRho] * pc.g, 0.0}};
}

int coupling_source_column(const std::vector<State5>& column, double dy, CouplingForm form,
                           const PhysicalConstants& pc, std::vector<State5>& out) {
  const std::size_t n = column.size();
  out.assign(n, State5{});
  if (n == 0) return 0;
  int violations = 0;
  std::vector<State5> plus(n);
  std::vector<State5> minus(n);
  for (std::size_t k = 0; k < n; ++k) {
    const SplitInputs s = split_inputs(column[k], pc);
    if (!(std::abs(s.v) < s.c_over_sqrt_gamma)) ++violations;
    plus[k] = split_flux(column[k], s.v + s.c_over_sqrt_gamma);
    minus[k] = split_flux(column[k], s.v - s.c_over_sqrt_gamma);
  }
  // Interface k sits between layer k-1 and layer k; 0 and n are the walls.
  std::vector<State5> interface(n + 1);
  interface[0] = split_flux_plus(ghost_layer_state(column.front(), WallSide::bottom), pc) + minus[0];
  for (std::size_t k = 1; k < n; ++k) interface[k] = plus[k - 1] + minus[k];
  interface[n] = plus[n - 1] + split_flux_minus(ghost_layer_state(column.back(), WallSide::top), pc);

  const double scale = form == CouplingForm::derived ? -1.0 / dy : dy;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = scale * (interface[k + 1] - interface[k]);
  }
  return violations;
}

int coupling_source(const LayerStack& stack, int i, int j, CouplingForm form,
                    const PhysicalConstants& pc, std::vector<State5>& out) {
  std::vector<State5> column(stack.layers.size());
  for (std::size_t k = 0; k < column.size(); ++k) column[k] = stack.layers[k].at(i, j);
  return coupling_source_column(column, stack.dy(), form, pc, out);
}

std::vector<State5> coupling_source(const LayerStack& stack, int i, int j, CouplingForm form,
                                    const PhysicalConstants& pc) {
  std::vector<State5> out;
  coupling_source(stack, i, j, form, pc, out);
  return out;
}

}  // namespace layered
