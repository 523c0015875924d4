#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "layered/coupling.hpp"
#include "layered/grid.hpp"
#include "layered/thermo.hpp"

namespace layered {

enum class CaseId { bubble, hot_cold, shear, igw };

/// Inertia-gravity-wave runs: perturbation and wind in layer 1, in layer 2, or both.
enum class IgwVariant { layer1, layer2, combined };

std::string_view to_string(CaseId id);
CaseId parse_case_id(std::string_view text);
std::string_view to_string(IgwVariant v);
IgwVariant parse_igw_variant(std::string_view text);

struct CaseConfig {
  CaseId case_id = CaseId::bubble;
  IgwVariant run_variant = IgwVariant::combined;
  double x_min = -10000.0;
  double x_max = 10000.0;
  double ly = 20000.0;
  double lz = 10000.0;
  double tf = 1000.0;
  int nx = 160;
  int nz = 80;
  int n_layers = 2;
  double cfl = 0.4;
  BoundaryKind bc_x = BoundaryKind::wall;
  BoundaryKind bc_z = BoundaryKind::wall;
  CouplingForm coupling_form = CouplingForm::derived;
  std::vector<double> snapshot_times;
  std::string output_dir = "output";

  double lx() const { return x_max - x_min; }
  double dx() const { return lx() / nx; }
  double dz() const { return lz / nz; }
  Grid grid() const { return Grid{nx, nz, x_min, 0.0, dx(), dz()}; }

  /// Throws ConfigError on non-physical values.
  void validate() const;
};

struct CatalogEntry {
  CaseId id;
  CaseConfig config;
};

/// Default configuration for every benchmark.
std::vector<CatalogEntry> case_catalog();
CaseConfig default_config(CaseId id);

// Perturbation parameters.
inline constexpr double kBubbleRadius = 2000.0;
inline constexpr double kWarmBubbleAmplitude = 10.0;
inline constexpr double kWarmBubbleHeight = 2000.0;
inline constexpr double kColdBubbleAmplitude = -15.0;
inline constexpr double kColdBubbleHeight = 8000.0;
inline constexpr double kBackgroundTheta = 300.0;
inline constexpr double kBruntVaisala = 0.01;
inline constexpr double kIgwAmplitude = 10.0;
inline constexpr double kIgwHalfWidth = 5000.0;
inline constexpr double kIgwCenterLayer1 = 100000.0;
inline constexpr double kIgwCenterLayer2 = 200000.0;

/// A cos(pi L / 2) for L = |(x, z) - (0, zc)| / 2000 <= 1, zero outside.
double bubble_perturbation(double x, double z, double amplitude, double zc);

/// theta_p sin(pi z / lz) / (1 + ((x - xp)/a)^2).
double igw_perturbation(double x, double z, double amplitude, double xp, double a, double lz);

/// Which of the two reference layers (0 or 1) a model layer inherits its
/// initial data from: layers centred below Ly/2 follow layer 1.
int reference_layer(int layer, int n_layers);

/// Background theta_bar of each layer.
std::vector<ThetaProfile> case_background(const CaseConfig& config);

/// Initial potential-temperature perturbation of a model layer at (x, z).
double initial_theta_perturbation(const CaseConfig& config, int layer, double x, double z);

/// Builds the initial stack: hydrostatic rho from theta_bar at cell centres,
/// rho_theta = rho (theta_bar + theta'), momenta from the case winds.
LayerStack init_case(const CaseConfig& config, const PhysicalConstants& pc = {});

}  // namespace layered
