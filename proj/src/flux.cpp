#include "layered/flux.hpp"

#include <cmath>
#include <string>

#include "layered/euler.hpp"

namespace layered {

std::string_view to_string(Limiter limiter) {
  return limiter == Limiter::van_leer ? "van_leer" : "none";
}

Limiter parse_limiter(std::string_view text) {
  if (text == "van_leer") return Limiter::van_leer;
  if (text == "none") return Limiter::none;
  throw ConfigError("invalid limiter '" + std::string(text) + "'; valid: {van_leer, none}");
}

void FluxParams::validate() const { check_omega(omega); }

State5 physical_flux(const State5& q, Axis axis, const PhysicalConstants& pc) {
  if (!admissible(q)) {
    throw AdmissibilityError("physical_flux: inadmissible state (rho=" + std::to_string(q[kRho]) +
                             ", rho_theta=" + std::to_string(q[kRhoTheta]) + ")");
  }
  const double p = pressure(q[kRhoTheta], pc);
  const std::size_t normal = axis == Axis::x ? kRhoU : (axis == Axis::y ? kRhoV : kRhoW);
  const double vn = q[normal] / q[kRho];
  State5 f{{q[kRho] * vn, q[kRhoU] * vn, q[kRhoV] * vn, q[kRhoW] * vn, q[kRhoTheta] * vn}};
  f[normal] += p;
  return f;
}

State5 mirror_state(const State5& q, Axis axis) {
  State5 out = q;
  const std::size_t normal = axis == Axis::x ? kRhoU : (axis == Axis::y ? kRhoV : kRhoW);
  out[normal] = -out[normal];
  return out;
}

double EulerSystem::signal_speed(const State5& q, Axis axis) const {
  const std::size_t normal = axis == Axis::x ? kRhoU : (axis == Axis::y ? kRhoV : kRhoW);
  const double theta = q[kRhoTheta] / q[kRho];
  return std::abs(q[normal] / q[kRho]) + std::sqrt(sound_speed_sq(q[kRho], theta, constants));
}

}  // namespace layered
