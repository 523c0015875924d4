#include "layered/thermo.hpp"

#include <cmath>
#include <string>

#include "layered/errors.hpp"

namespace layered {

PhysicalConstants PhysicalConstants::make(double f, double g, double p0, double rd, double cv) {
  PhysicalConstants pc;
  pc.f = f;
  pc.g = g;
  pc.p0 = p0;
  pc.rd = rd;
  pc.cv = cv;
  pc.cp = cv + rd;
  pc.gamma = pc.cp / cv;
  pc.c0 = std::pow(rd, pc.gamma) / std::pow(p0, rd / cv);
  return pc;
}

double pressure(double rho_theta, const PhysicalConstants& pc) {
  if (!(rho_theta > 0.0)) {
    throw DomainError("pressure: rho_theta must be positive, got " + std::to_string(rho_theta));
  }
  return pc.c0 * std::pow(rho_theta, pc.gamma);
}

double sound_speed_sq(double rho, double theta, const PhysicalConstants& pc) {
  if (!(rho > 0.0) || !(theta > 0.0)) {
    throw DomainError("sound_speed_sq: rho and theta must be positive");
  }
  return pc.c0 * std::pow(rho * theta, pc.gamma - 1.0) * pc.gamma * theta;
}

double exner(double p, const PhysicalConstants& pc) {
  if (!(p > 0.0)) {
    throw DomainError("exner: pressure must be positive, got " + std::to_string(p));
  }
  return std::pow(p / pc.p0, pc.rd / pc.cp);
}

double total_energy(const State5& q, double z, const PhysicalConstants& pc) {
  const double rho = q[kRho];
  if (!(rho > 0.0)) {
    throw DomainError("total_energy: rho must be positive, got " + std::to_string(rho));
  }
  const double inv = 1.0 / rho;
  const double u = q[kRhoU] * inv;
  const double v = q[kRhoV] * inv;
  const double w = q[kRhoW] * inv;
  const double theta = q[kRhoTheta] * inv;
  const double pi = exner(pressure(q[kRhoTheta], pc), pc);
  return pc.cv * theta * pi + 0.5 * (u * u + v * v + w * w) + pc.g * z;
}

double ThetaProfile::theta(double z, const PhysicalConstants& pc) const {
  switch (kind) {
    case Kind::constant:
      return theta0;
    case Kind::stratified:
      return theta0 * std::exp(brunt_vaisala * brunt_vaisala * z / pc.g);
  }
  return theta0;
}

HydrostaticPoint hydrostatic_profile(const ThetaProfile& profile, double z,
                                     const PhysicalConstants& pc) {
  if (!(profile.theta0 > 0.0)) {
    throw DomainError("hydrostatic_profile: theta0 must be positive");
  }
  double pi = 1.0;
  switch (profile.kind) {
    case ThetaProfile::Kind::constant:
      pi = 1.0 - pc.g * z / (pc.cp * profile.theta0);
      break;
    case ThetaProfile::Kind::stratified: {
      const double n2 = profile.brunt_vaisala * profile.brunt_vaisala;
      if (n2 == 0.0) {
        pi = 1.0 - pc.g * z / (pc.cp * profile.theta0);
      } else {
        pi = 1.0 + pc.g * pc.g / (pc.cp * profile.theta0 * n2) * (std::exp(-n2 * z / pc.g) - 1.0);
      }
      break;
    }
  }
  if (!(pi > 0.0)) {
    throw DomainError("hydrostatic_profile: Exner pressure non-positive at z=" +
                      std::to_string(z) + " (domain too tall for profile)");
  }
  const double theta = profile.theta(z, pc);
  const double rho = pc.p0 / (pc.rd * theta) * std::pow(pi, pc.cv / pc.rd);
  return {pi, rho};
}

bool admissible(const State5& q) {
  for (double x : q.c) {
    if (!std::isfinite(x)) return false;
  }
  return q[kRho] > 0.0 && q[kRhoTheta] > 0.0;
}

}  // namespace layered
