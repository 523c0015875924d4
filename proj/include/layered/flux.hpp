#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "layered/errors.hpp"
#include "layered/grid.hpp"
#include "layered/reconstruct.hpp"

namespace layered {

/// What the centred flux machinery needs from a system of conservation laws.
template <class S>
concept ConservationSystem = requires(const S& s, const typename S::State& q, Axis a, double z) {
  { s.flux(q, a) } -> std::same_as<typename S::State>;
  { s.limiter_indicator(q, z) } -> std::convertible_to<double>;
  { s.signal_speed(q, a) } -> std::convertible_to<double>;
  { s.mirror(q, a) } -> std::same_as<typename S::State>;
  { s.admissible(q) } -> std::convertible_to<bool>;
};

enum class Limiter { van_leer, none };

std::string_view to_string(Limiter limiter);
Limiter parse_limiter(std::string_view text);

struct FluxParams {
  double omega = 0.5;  // GFORCE blend; 0.5 is FORCE
  Limiter limiter = Limiter::van_leer;

  void validate() const;
};

template <class State>
struct InterfaceStatePair {
  State qL;
  State qR;
  Axis axis = Axis::x;
  double gauss_weight = 1.0;
};

/// Left and right values of the limiter indicator at one interface.
struct InterfaceEnergy {
  double eL = 0.0;
  double eR = 0.0;
  double jump() const { return eR - eL; }
};

struct FlowParameters {
  double r_left = 1.0;
  double r_right = 1.0;
};

namespace detail {

template <class S>
typename S::State checked_flux(const S& sys, const typename S::State& q, Axis axis) {
  if (!sys.admissible(q)) throw AdmissibilityError("flux evaluated on an inadmissible state");
  return sys.flux(q, axis);
}

/// Both physical fluxes of a pair, evaluated once and shared by LF and LW.
template <class S>
struct PairFluxes {
  typename S::State fL;
  typename S::State fR;
};

template <class S>
PairFluxes<S> pair_fluxes(const S& sys, const InterfaceStatePair<typename S::State>& p) {
  return {checked_flux(sys, p.qL, p.axis), checked_flux(sys, p.qR, p.axis)};
}

template <class S>
typename S::State lax_friedrichs(const InterfaceStatePair<typename S::State>& p,
                                 const PairFluxes<S>& f, double dt, double dx) {
  return 0.5 * (f.fL + f.fR - (0.5 * dx / dt) * (p.qR - p.qL));
}

template <class S>
typename S::State lax_wendroff(const S& sys, const InterfaceStatePair<typename S::State>& p,
                               const PairFluxes<S>& f, double dt, double dx) {
  const typename S::State star = 0.5 * (p.qL + p.qR) - (dt / dx) * (f.fR - f.fL);
  if (!sys.admissible(star)) {
    throw AdmissibilityError("Lax-Wendroff intermediate state is inadmissible");
  }
  return sys.flux(star, p.axis);
}

inline double flow_ratio(double num, double den) {
  if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num))) return 1.0;
  return num / den;
}

}  // namespace detail

/// 0.5 (F(qL) + F(qR) - 0.5 (dx/dt) (qR - qL)).
template <ConservationSystem S>
typename S::State lax_friedrichs_flux(const S& sys, const InterfaceStatePair<typename S::State>& p,
                                      double dt, double dx) {
  return detail::lax_friedrichs(p, detail::pair_fluxes(sys, p), dt, dx);
}

/// Two-step form F(Q*) with Q* = (qL + qR)/2 - (dt/dx)(F(qR) - F(qL)).
template <ConservationSystem S>
typename S::State lax_wendroff_flux(const S& sys, const InterfaceStatePair<typename S::State>& p,
                                    double dt, double dx) {
  return detail::lax_wendroff(sys, p, detail::pair_fluxes(sys, p), dt, dx);
}

inline void check_omega(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw ConfigError("GFORCE omega must lie in [0, 1], got " + std::to_string(omega));
  }
}

template <ConservationSystem S>
typename S::State gforce_flux(const S& sys, const InterfaceStatePair<typename S::State>& p,
                              double dt, double dx, double omega = 0.5) {
  check_omega(omega);
  const auto f = detail::pair_fluxes(sys, p);
  return omega * detail::lax_wendroff(sys, p, f, dt, dx) +
         (1.0 - omega) * detail::lax_friedrichs(p, f, dt, dx);
}

/// Centred van Leer limiter; phi_g = (1 - |c|) / (1 + |c|).
inline double van_leer_centered(double r, double courant) {
  if (r <= 0.0) return 0.0;
  if (r <= 1.0) return 2.0 * r / (1.0 + r);
  const double c = std::abs(courant);
  const double phi_g = (1.0 - c) / (1.0 + c);
  return phi_g + 2.0 * r * (1.0 - phi_g) / (1.0 + r);
}

/// Ratios of the indicator jumps at i-1/2 and i+3/2 over the jump at i+1/2.
/// A vanishing central jump is smooth flow and maps to r = 1.
inline FlowParameters flow_parameters_from_jumps(double jump_left, double jump_center,
                                                 double jump_right) {
  return {detail::flow_ratio(jump_left, jump_center), detail::flow_ratio(jump_right, jump_center)};
}

inline FlowParameters flow_parameters(const InterfaceEnergy& left, const InterfaceEnergy& center,
                                      const InterfaceEnergy& right) {
  return flow_parameters_from_jumps(left.jump(), center.jump(), right.jump());
}

/// psi = min(psi(rL), psi(rR)); Limiter::none always returns 0 (pure GFORCE).
inline double limiter_value(const FluxParams& params, const FlowParameters& r, double courant) {
  switch (params.limiter) {
    case Limiter::van_leer:
      return std::min(van_leer_centered(r.r_left, courant), van_leer_centered(r.r_right, courant));
    case Limiter::none:
      return 0.0;
  }
  return 0.0;
}

/// dt (|vel_n| + c) / dx from the arithmetic mean of the pair, clamped to [0, 0.999].
template <ConservationSystem S>
double local_courant(const S& sys, const InterfaceStatePair<typename S::State>& p, double dt,
                     double dx) {
  const typename S::State mean = 0.5 * (p.qL + p.qR);
  const double c = dt * sys.signal_speed(mean, p.axis) / dx;
  return std::clamp(c, 0.0, 0.999);
}

/// Jumps of the limiter indicator at i-1/2, i+1/2 and i+3/2 for one Gauss point.
struct NeighborJumps {
  double left = 0.0;
  double center = 0.0;
  double right = 0.0;
};

/// F_GFORCE + psi (F_LW - F_GFORCE), with psi shared by every component.
template <ConservationSystem S>
typename S::State flic_flux(const S& sys, const InterfaceStatePair<typename S::State>& p,
                            const NeighborJumps& jumps, double dt, double dx, double courant,
                            const FluxParams& params = {}) {
  const auto f = detail::pair_fluxes(sys, p);
  const typename S::State lw = detail::lax_wendroff(sys, p, f, dt, dx);
  const typename S::State lf = detail::lax_friedrichs(p, f, dt, dx);
  const typename S::State gforce = params.omega * lw + (1.0 - params.omega) * lf;
  const double psi = limiter_value(
      params, flow_parameters_from_jumps(jumps.left, jumps.center, jumps.right), courant);
  return gforce + psi * (lw - gforce);
}

/// Local coordinate of the two Gauss-Legendre points on an interface.
inline constexpr double kGaussOffset = 0.28867513459481288225;  // 1 / (2 sqrt 3)
inline constexpr std::array<double, 2> kGaussPoints = {-kGaussOffset, kGaussOffset};

/// Interface-averaged FLIC flux between two reconstructed neighbours:
/// 0.5 * sum over the two Gauss points (unit weights). `polyL` lies on the
/// low side of the interface along `axis`. `jumps` supplies the indicator
/// jumps per Gauss point; when omitted the neighbour jumps equal the central
/// one (r = 1). `z_of_point` gives the physical height of each Gauss point for
/// the indicator.
template <ConservationSystem S>
typename S::State interface_flux_quadrature(const S& sys, const Poly<S::State::size>& polyL,
                                            const Poly<S::State::size>& polyR, Axis axis,
                                            double dt, double spacing,
                                            const std::array<double, 2>& indicator_height,
                                            const std::array<NeighborJumps, 2>* jumps = nullptr,
                                            const FluxParams& params = {}) {
  typename S::State sum{};
  for (int g = 0; g < 2; ++g) {
    const double t = kGaussPoints[g];
    InterfaceStatePair<typename S::State> pair;
    pair.axis = axis;
    if (axis == Axis::x) {
      pair.qL = eval_poly_unchecked(polyL, 0.5, t);
      pair.qR = eval_poly_unchecked(polyR, -0.5, t);
    } else {
      pair.qL = eval_poly_unchecked(polyL, t, 0.5);
      pair.qR = eval_poly_unchecked(polyR, t, -0.5);
    }
    NeighborJumps nj;
    if (jumps != nullptr) {
      nj = (*jumps)[g];
    } else {
      const double j = sys.limiter_indicator(pair.qR, indicator_height[g]) -
                       sys.limiter_indicator(pair.qL, indicator_height[g]);
      nj = {j, j, j};
    }
    const double c = local_courant(sys, pair, dt, spacing);
    sum += flic_flux(sys, pair, nj, dt, spacing, c, params);
  }
  return 0.5 * sum;
}

}  // namespace layered
