#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "layered/errors.hpp"
#include "layered/grid.hpp"
#include "layered/state.hpp"

namespace layered {

/// Nonlinear-weight parameters. The centre stencil carries the large linear
/// weight; the cross term uses equal weights for its four candidates.
struct WenoParams {
  double epsilon = 1e-12;
  double r_exponent = 5.0;
  double lambda_center = 100.0;
  double lambda_side = 1.0;

  void validate() const;
};

struct Weno1d {
  double qx = 0.0;
  double qxx = 0.0;
  std::array<double, 3> weights{};
  std::array<double, 3> smoothness{};
};

struct CrossTerm {
  double qxz = 0.0;
  std::array<double, 4> candidates{};
  std::array<double, 4> weights{};
  std::array<double, 4> smoothness{};
};

/// 3x3 block of cell averages around the centre cell, indexed [di + 1][dk + 1]
/// with di along x and dk along z.
using Neighborhood3x3 = std::array<std::array<double, 3>, 3>;

namespace detail {

/// (epsilon + is)^r with a multiply chain for small integer r.
inline double weno_power(double base, double r) {
  if (r == 5.0) {
    const double b2 = base * base;
    return b2 * b2 * base;
  }
  if (r == 2.0) return base * base;
  if (r == 1.0) return base;
  return std::pow(base, r);
}

}  // namespace detail

/// Dimension-by-dimension quadratic WENO from five cell averages centred on q0.
/// Returns the P1 and P2 coefficients in local coordinates [-1/2, 1/2].
inline Weno1d weno_1d(double qm2, double qm1, double q0, double q1, double q2,
                      const WenoParams& p = {}) {
  Weno1d out;
  // Operation order is mirror-symmetric: reversed input gives exactly negated
  // slopes and identical curvatures, so symmetric data stays symmetric.
  const std::array<double, 3> qx = {
      (0.5 * qm2 - 2.0 * qm1) + 1.5 * q0,
      0.5 * (q1 - qm1),
      -((0.5 * q2 - 2.0 * q1) + 1.5 * q0),
  };
  // S3 uses the standard second difference over {q0, q1, q2}.
  const std::array<double, 3> qxx = {
      0.5 * ((qm2 - 2.0 * qm1) + q0),
      0.5 * ((qm1 + q1) - 2.0 * q0),
      0.5 * ((q2 - 2.0 * q1) + q0),
  };
  const std::array<double, 3> lambda = {p.lambda_side, p.lambda_center, p.lambda_side};
  std::array<double, 3> alpha{};
  for (int s = 0; s < 3; ++s) {
    out.smoothness[s] = qx[s] * qx[s] + (13.0 / 3.0) * qxx[s] * qxx[s];
    alpha[s] = lambda[s] / detail::weno_power(p.epsilon + out.smoothness[s], p.r_exponent);
  }
  double sum = (alpha[0] + alpha[2]) + alpha[1];
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    alpha = lambda;
    sum = (lambda[0] + lambda[2]) + lambda[1];
  }
  for (int s = 0; s < 3; ++s) out.weights[s] = alpha[s] / sum;
  out.qx = (out.weights[0] * qx[0] + out.weights[2] * qx[2]) + out.weights[1] * qx[1];
  out.qxx = (out.weights[0] * qxx[0] + out.weights[2] * qxx[2]) + out.weights[1] * qxx[1];
  return out;
}

/// Mixed xz coefficient from the four corner moments, given the centre cell's
/// already reconstructed 1D coefficients.
inline CrossTerm weno_cross_term(const Neighborhood3x3& n, double qx, double qz, double qxx,
                                 double qzz, const WenoParams& p = {}) {
  CrossTerm out;
  const double c = n[1][1];
  // Candidates from the (+,+), (+,-), (-,+) and (-,-) corners, written so that
  // a mirror in x or z maps each candidate exactly onto the negated partner.
  out.candidates = {
      ((((n[2][2] - c) - qx) - qz) - qxx) - qzz,
      ((((-n[2][0] + c) + qx) - qz) + qxx) + qzz,
      ((((-n[0][2] + c) - qx) + qz) + qxx) + qzz,
      ((((n[0][0] - c) + qx) + qz) - qxx) - qzz,
  };
  const double base = 4.0 * qxx * qxx + 4.0 * qzz * qzz;
  std::array<double, 4> alpha{};
  for (int s = 0; s < 4; ++s) {
    out.smoothness[s] = base + out.candidates[s] * out.candidates[s];
    alpha[s] = 1.0 / detail::weno_power(p.epsilon + out.smoothness[s], p.r_exponent);
  }
  double sum = (alpha[0] + alpha[3]) + (alpha[1] + alpha[2]);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    alpha = {1.0, 1.0, 1.0, 1.0};
    sum = 4.0;
  }
  for (int s = 0; s < 4; ++s) out.weights[s] = alpha[s] / sum;
  out.qxz = (out.weights[0] * out.candidates[0] + out.weights[3] * out.candidates[3]) +
            (out.weights[1] * out.candidates[1] + out.weights[2] * out.candidates[2]);
  return out;
}

/// Quadratic reconstruction q0 + qx P1(x) + qxx P2(x) + qz P1(z) + qzz P2(z)
/// + qxz P1(x) P1(z), with P1(s) = s and P2(s) = s^2 - 1/12.
template <std::size_t N>
struct Poly {
  Vec<N> q0, qx, qxx, qz, qzz, qxz;
};

using CellPoly = Poly<5>;

/// Evaluation without the cell-bounds check, for the flux loops.
template <std::size_t N>
inline Vec<N> eval_poly_unchecked(const Poly<N>& p, double x, double z) {
  const double p2x = x * x - 1.0 / 12.0;
  const double p2z = z * z - 1.0 / 12.0;
  const double xz = x * z;
  Vec<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = p.q0[k] + p.qx[k] * x + p.qxx[k] * p2x + p.qz[k] * z + p.qzz[k] * p2z +
             p.qxz[k] * xz;
  }
  return out;
}

/// Pointwise value at local coordinates in [-1/2, 1/2]^2.
template <std::size_t N>
Vec<N> eval_poly(const Poly<N>& p, double x_local, double z_local) {
  constexpr double kHalf = 0.5 + 1e-12;
  if (!(std::abs(x_local) <= kHalf) || !(std::abs(z_local) <= kHalf)) {
    throw DomainError("eval_poly: local coordinates outside the cell");
  }
  return eval_poly_unchecked(p, x_local, z_local);
}

template <std::size_t N>
class PolyGrid {
 public:
  PolyGrid(int nx, int nz) : nx_(nx), nz_(nz), polys_(static_cast<std::size_t>(nx) * nz) {}
  int nx() const { return nx_; }
  int nz() const { return nz_; }
  Poly<N>& at(int i, int j) { return polys_[static_cast<std::size_t>(j) * nx_ + i]; }
  const Poly<N>& at(int i, int j) const { return polys_[static_cast<std::size_t>(j) * nx_ + i]; }

 private:
  int nx_;
  int nz_;
  std::vector<Poly<N>> polys_;
};

/// Reconstructs every interior cell component-wise. Ghost cells must already
/// hold boundary data at depth >= 2.
template <std::size_t N>
PolyGrid<N> reconstruct_field(const Field<N>& f, const WenoParams& params = {}) {
  if (f.ghost() < 2) {
    throw ConfigError("reconstruct_field: ghost width must be at least 2");
  }
  PolyGrid<N> out(f.nx(), f.nz());
  for (int j = 0; j < f.nz(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      Poly<N>& p = out.at(i, j);
      for (std::size_t k = 0; k < N; ++k) {
        const double c = f.at(i, j)[k];
        const Weno1d wx =
            weno_1d(f.at(i - 2, j)[k], f.at(i - 1, j)[k], c, f.at(i + 1, j)[k], f.at(i + 2, j)[k], params);
        const Weno1d wz =
            weno_1d(f.at(i, j - 2)[k], f.at(i, j - 1)[k], c, f.at(i, j + 1)[k], f.at(i, j + 2)[k], params);
        Neighborhood3x3 nb{};
        for (int di = -1; di <= 1; ++di) {
          for (int dk = -1; dk <= 1; ++dk) {
            nb[di + 1][dk + 1] = f.at(i + di, j + dk)[k];
          }
        }
        const CrossTerm xz = weno_cross_term(nb, wx.qx, wz.qx, wx.qxx, wz.qxx, params);
        p.q0[k] = c;
        p.qx[k] = wx.qx;
        p.qxx[k] = wx.qxx;
        p.qz[k] = wz.qx;
        p.qzz[k] = wz.qxx;
        p.qxz[k] = xz.qxz;
      }
    }
  }
  return out;
}

}  // namespace layered
