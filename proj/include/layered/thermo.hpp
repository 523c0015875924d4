#pragma once

#include <cmath>

#include "layered/state.hpp"

namespace layered {

/// Dry-air constants. cp, gamma and c0 are derived from rd and cv so that
/// cp = cv + rd holds exactly; use make() after changing rd, cv or p0.
struct PhysicalConstants {
  double f = 1e-4;    // Coriolis parameter [1/s]
  double g = 9.81;    // gravity [m/s^2]
  double p0 = 1e5;    // reference pressure [Pa]
  double rd = 287.0;  // dry-gas constant [J/(K kg)]
  double cv = 717.0;  // [J/(K kg)]
  double cp = cv + rd;
  double gamma = cp / cv;
  double c0 = std::pow(rd, gamma) / std::pow(p0, rd / cv);

  static PhysicalConstants make(double f, double g, double p0, double rd, double cv);
};

/// P = C0 (rho theta)^gamma.
double pressure(double rho_theta, const PhysicalConstants& pc = {});

/// cs^2 = C0 (rho theta)^(gamma-1) gamma theta, identical to gamma P / rho.
double sound_speed_sq(double rho, double theta, const PhysicalConstants& pc = {});

/// Exner pressure (P/P0)^(Rd/cp).
double exner(double p, const PhysicalConstants& pc = {});

/// Specific total energy cv theta pi + |u|^2/2 + g z [J/kg].
double total_energy(const State5& q, double z, const PhysicalConstants& pc = {});

/// Background potential temperature. Only the two families with closed-form
/// hydrostatic solutions are representable.
struct ThetaProfile {
  enum class Kind { constant, stratified };
  Kind kind = Kind::constant;
  double theta0 = 300.0;
  double brunt_vaisala = 0.0;  // N [1/s], used by the stratified profile

  static ThetaProfile constant(double theta0) { return {Kind::constant, theta0, 0.0}; }
  static ThetaProfile stratified(double theta0, double n) { return {Kind::stratified, theta0, n}; }

  /// theta_bar(z); theta0 * exp(N^2 z / g) for the stratified profile.
  double theta(double z, const PhysicalConstants& pc = {}) const;
};

struct HydrostaticPoint {
  double pi;
  double rho;
};

/// Hydrostatically balanced (pi, rho) at height z with pi(0) = 1.
HydrostaticPoint hydrostatic_profile(const ThetaProfile& profile, double z,
                                     const PhysicalConstants& pc = {});

/// rho > 0, rho_theta > 0 and all components finite.
bool admissible(const State5& q);

}  // namespace layered
