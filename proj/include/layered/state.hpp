#pragma once

#include <array>
#include <cstddef>

namespace layered {

/// Fixed-size vector of conserved variables.
template <std::size_t N>
struct Vec {
  static constexpr std::size_t size = N;
  std::array<double, N> c{};

  constexpr double& operator[](std::size_t k) { return c[k]; }
  constexpr double operator[](std::size_t k) const { return c[k]; }

  constexpr Vec& operator+=(const Vec& o) {
    for (std::size_t k = 0; k < N; ++k) c[k] += o.c[k];
    return *this;
  }
  constexpr Vec& operator-=(const Vec& o) {
    for (std::size_t k = 0; k < N; ++k) c[k] -= o.c[k];
    return *this;
  }
  constexpr Vec& operator*=(double s) {
    for (std::size_t k = 0; k < N; ++k) c[k] *= s;
    return *this;
  }
  friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

template <std::size_t N>
constexpr Vec<N> operator+(Vec<N> a, const Vec<N>& b) {
  return a += b;
}
template <std::size_t N>
constexpr Vec<N> operator-(Vec<N> a, const Vec<N>& b) {
  return a -= b;
}
template <std::size_t N>
constexpr Vec<N> operator*(double s, Vec<N> a) {
  return a *= s;
}
template <std::size_t N>
constexpr Vec<N> operator*(Vec<N> a, double s) {
  return a *= s;
}

/// Conserved state [rho, rho*u, rho*v, rho*w, rho*theta].
using State5 = Vec<5>;

inline constexpr std::size_t kRho = 0;
inline constexpr std::size_t kRhoU = 1;
inline constexpr std::size_t kRhoV = 2;
inline constexpr std::size_t kRhoW = 3;
inline constexpr std::size_t kRhoTheta = 4;

/// Builds a conserved state from primitive values.
constexpr State5 from_primitive(double rho, double u, double v, double w, double theta) {
  return State5{{rho, rho * u, rho * v, rho * w, rho * theta}};
}

}  // namespace layered
