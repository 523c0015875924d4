#include "layered/cases.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "layered/errors.hpp"

namespace layered {

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::bubble: return "bubble";
    case CaseId::hot_cold: return "hot_cold";
    case CaseId::shear: return "shear";
    case CaseId::igw: return "igw";
  }
  return "bubble";
}

CaseId parse_case_id(std::string_view text) {
  if (text == "bubble") return CaseId::bubble;
  if (text == "hot_cold") return CaseId::hot_cold;
  if (text == "shear") return CaseId::shear;
  if (text == "igw") return CaseId::igw;
  throw ConfigError("unknown case '" + std::string(text) +
                    "'; valid: {bubble, hot_cold, shear, igw}");
}

std::string_view to_string(IgwVariant v) {
  switch (v) {
    case IgwVariant::layer1: return "layer1";
    case IgwVariant::layer2: return "layer2";
    case IgwVariant::combined: return "combined";
  }
  return "combined";
}

IgwVariant parse_igw_variant(std::string_view text) {
  if (text == "layer1") return IgwVariant::layer1;
  if (text == "layer2") return IgwVariant::layer2;
  if (text == "combined") return IgwVariant::combined;
  throw ConfigError("invalid run_variant '" + std::string(text) +
                    "'; valid: {layer1, layer2, combined}");
}

void CaseConfig::validate() const {
  if (nx < 1 || nz < 1) throw ConfigError("nx and nz must be >= 1");
  if (n_layers < 1) throw ConfigError("n_layers must be >= 1");
  if (!(x_max > x_min)) throw ConfigError("x_max must exceed x_min");
  if (!(ly > 0.0) || !(lz > 0.0)) throw ConfigError("Ly and Lz must be positive");
  if (!(tf >= 0.0)) throw ConfigError("tf must be >= 0");
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1)");
  if (bc_z != BoundaryKind::wall) throw ConfigError("bc_z must be wall");
  for (double t : snapshot_times) {
    if (!(t >= 0.0)) throw ConfigError("snapshot times must be >= 0");
  }
  auto inside = [&](double x, double z) {
    return x >= x_min && x <= x_max && z >= 0.0 && z <= lz;
  };
  switch (case_id) {
    case CaseId::bubble:
      if (!inside(0.0, kWarmBubbleHeight)) throw ConfigError("bubble centre outside the domain");
      break;
    case CaseId::hot_cold:
      if (!inside(0.0, kWarmBubbleHeight) || !inside(0.0, kColdBubbleHeight)) {
        throw ConfigError("bubble centre outside the domain");
      }
      break;
    case CaseId::shear:
      break;
    case CaseId::igw:
      if (!inside(kIgwCenterLayer1, 0.5 * lz) || !inside(kIgwCenterLayer2, 0.5 * lz)) {
        throw ConfigError("perturbation centre x_p outside the domain");
      }
      break;
  }
}

CaseConfig default_config(CaseId id) {
  CaseConfig c;
  c.case_id = id;
  switch (id) {
    case CaseId::bubble:
      c.bc_x = BoundaryKind::wall;
      c.tf = 1000.0;
      c.snapshot_times = {0.0, 120.0, 300.0, 600.0, 1000.0};
      break;
    case CaseId::hot_cold:
      c.bc_x = BoundaryKind::periodic;
      c.tf = 1000.0;
      c.snapshot_times = {0.0, 120.0, 300.0, 600.0, 1000.0};
      break;
    case CaseId::shear:
      c.bc_x = BoundaryKind::periodic;
      c.tf = 300.0;
      c.snapshot_times.clear();
      for (int k = 0; k <= 10; ++k) c.snapshot_times.push_back(30.0 * k);
      break;
    case CaseId::igw:
      c.x_min = 0.0;
      c.x_max = 300000.0;
      c.nx = 600;
      c.nz = 20;
      c.bc_x = BoundaryKind::periodic;
      c.tf = 3000.0;
      c.snapshot_times = {0.0, 1000.0, 2000.0, 2500.0, 3000.0};
      break;
  }
  c.output_dir = "output_" + std::string(to_string(id));
  return c;
}

std::vector<CatalogEntry> case_catalog() {
  std::vector<CatalogEntry> out;
  for (CaseId id : {CaseId::bubble, CaseId::hot_cold, CaseId::shear, CaseId::igw}) {
    out.push_back({id, default_config(id)});
  }
  return out;
}

double bubble_perturbation(double x, double z, double amplitude, double zc) {
  const double l = std::sqrt(x * x + (z - zc) * (z - zc)) / kBubbleRadius;
  if (l > 1.0) return 0.0;
  return amplitude * std::cos(std::numbers::pi * l / 2.0);
}

double igw_perturbation(double x, double z, double amplitude, double xp, double a, double lz) {
  const double s = (x - xp) / a;
  return amplitude * std::sin(std::numbers::pi * z / lz) / (1.0 + s * s);
}

int reference_layer(int layer, int n_layers) {
  // Centre of layer k is (k + 1/2) dy; a centre exactly at Ly/2 goes with layer 1.
  return 2 * layer + 1 <= n_layers ? 0 : 1;
}

std::vector<ThetaProfile> case_background(const CaseConfig& config) {
  std::vector<ThetaProfile> out;
  for (int k = 0; k < config.n_layers; ++k) {
    const int ref = reference_layer(k, config.n_layers);
    switch (config.case_id) {
      case CaseId::bubble:
      case CaseId::hot_cold:
        out.push_back(ThetaProfile::constant(kBackgroundTheta));
        break;
      case CaseId::shear:
        out.push_back(ref == 0 ? ThetaProfile::constant(kBackgroundTheta)
                               : ThetaProfile::stratified(kBackgroundTheta, kBruntVaisala));
        break;
      case CaseId::igw:
        out.push_back(ThetaProfile::stratified(kBackgroundTheta, kBruntVaisala));
        break;
    }
  }
  return out;
}

double initial_theta_perturbation(const CaseConfig& config, int layer, double x, double z) {
  const int ref = reference_layer(layer, config.n_layers);
  switch (config.case_id) {
    case CaseId::bubble:
      return ref == 0 ? bubble_perturbation(x, z, kWarmBubbleAmplitude, kWarmBubbleHeight) : 0.0;
    case CaseId::hot_cold:
      return ref == 0 ? bubble_perturbation(x, z, kWarmBubbleAmplitude, kWarmBubbleHeight)
                      : bubble_perturbation(x, z, kColdBubbleAmplitude, kColdBubbleHeight);
    case CaseId::shear:
      return 0.0;
    case CaseId::igw: {
      const bool l1 = config.run_variant != IgwVariant::layer2;
      const bool l2 = config.run_variant != IgwVariant::layer1;
      if (ref == 0 && l1) {
        return igw_perturbation(x, z, kIgwAmplitude, kIgwCenterLayer1, kIgwHalfWidth, config.lz);
      }
      if (ref == 1 && l2) {
        return igw_perturbation(x, z, kIgwAmplitude, kIgwCenterLayer2, kIgwHalfWidth, config.lz);
      }
      return 0.0;
    }
  }
  return 0.0;
}

namespace {

struct Wind {
  double u = 0.0;
  double v = 0.0;
};

Wind initial_wind(const CaseConfig& config, int layer, double z) {
  const int ref = reference_layer(layer, config.n_layers);
  switch (config.case_id) {
    case CaseId::bubble:
      return {};
    case CaseId::hot_cold:
      return {20.0, 0.0};
    case CaseId::shear:
      if (ref == 0) return {50.0 * std::sqrt(std::log(z / config.lz + 1.0)), 10.0};
      return {0.0, -10.0};
    case CaseId::igw: {
      if (ref == 0 && config.run_variant != IgwVariant::layer2) return {20.0, 0.0};
      if (ref == 1 && config.run_variant != IgwVariant::layer1) return {-20.0, 0.0};
      return {};
    }
  }
  return {};
}

}  // namespace

LayerStack init_case(const CaseConfig& config, const PhysicalConstants& pc) {
  config.validate();
  const Grid grid = config.grid();
  LayerStack stack = LayerStack::make(grid, config.ly, case_background(config));
  for (int k = 0; k < config.n_layers; ++k) {
    const ThetaProfile& bg = stack.background[k];
    LayerField& layer = stack.layers[k];
    for (int j = 0; j < grid.nz; ++j) {
      const double z = grid.z_center(j);
      const HydrostaticPoint hp = hydrostatic_profile(bg, z, pc);
      const double theta_bar = bg.theta(z, pc);
      const Wind wind = initial_wind(config, k, z);
      for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.x_center(i);
        const double theta = theta_bar + initial_theta_perturbation(config, k, x, z);
        layer.at(i, j) = from_primitive(hp.rho, wind.u, wind.v, 0.0, theta);
      }
    }
  }
  return stack;
}

}  // namespace layered
