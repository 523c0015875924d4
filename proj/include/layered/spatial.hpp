#pragma once

#include <string>
#include <vector>

#include "layered/flux.hpp"
#include "layered/grid.hpp"
#include "layered/reconstruct.hpp"

namespace layered {

/// Semi-discrete divergence -(F_{i+1/2} - F_{i-1/2})/dx - (H_{j+1/2} - H_{j-1/2})/dz
/// of one x-z field. `filled` must have its ghost ring set for (bc_x, bc_z).
/// Interface states on boundary faces come from the boundary condition applied
/// to the interior reconstruction (periodic wrap or wall image). Returns the
/// tendency for interior cells in row-major order (index j * nx + i).
template <ConservationSystem S>
std::vector<typename S::State> spatial_operator(const S& sys,
                                                const Field<S::State::size>& filled,
                                                const Grid& grid, BoundaryKind bc_x,
                                                BoundaryKind bc_z, const WenoParams& weno,
                                                const FluxParams& fp, double dt) {
  using State = typename S::State;
  const int nx = grid.nx;
  const int nz = grid.nz;
  const PolyGrid<S::State::size> polys = reconstruct_field(filled, weno);
  std::vector<State> tendency(static_cast<std::size_t>(nx) * nz);

  // Per-line scratch: face states and indicator jumps, indexed [face][gauss].
  struct FacePoint {
    State qL;
    State qR;
    double jump;
  };
  std::vector<std::array<FacePoint, 2>> faces;
  std::vector<State> face_flux;

  auto sweep = [&](Axis axis, int n_cells, int line, BoundaryKind bc) {
    const bool along_x = axis == Axis::x;
    const double h = along_x ? grid.dx : grid.dz;
    auto poly = [&](int k) -> const Poly<S::State::size>& {
      return along_x ? polys.at(k, line) : polys.at(line, k);
    };
    auto eval_side = [&](int k, double side, double t) {
      return along_x ? eval_poly_unchecked(poly(k), side, t) : eval_poly_unchecked(poly(k), t, side);
    };
    faces.resize(static_cast<std::size_t>(n_cells) + 1);
    face_flux.resize(static_cast<std::size_t>(n_cells) + 1);
    int face = 0;
    try {
      for (face = 0; face <= n_cells; ++face) {
        for (int g = 0; g < 2; ++g) {
          const double t = kGaussPoints[g];
          FacePoint& fp_out = faces[face][g];
          if (face > 0) {
            fp_out.qL = eval_side(face - 1, 0.5, t);
          } else if (bc == BoundaryKind::periodic) {
            fp_out.qL = eval_side(n_cells - 1, 0.5, t);
          } else {
            fp_out.qL = sys.mirror(eval_side(0, -0.5, t), axis);
          }
          if (face < n_cells) {
            fp_out.qR = eval_side(face, -0.5, t);
          } else if (bc == BoundaryKind::periodic) {
            fp_out.qR = eval_side(0, -0.5, t);
          } else {
            fp_out.qR = sys.mirror(eval_side(n_cells - 1, 0.5, t), axis);
          }
          if (!sys.admissible(fp_out.qL) || !sys.admissible(fp_out.qR)) {
            throw AdmissibilityError("inadmissible reconstructed interface state");
          }
          const double height =
              along_x ? grid.z_center(line) + t * grid.dz : grid.z_min + face * grid.dz;
          fp_out.jump = sys.limiter_indicator(fp_out.qR, height) -
                        sys.limiter_indicator(fp_out.qL, height);
        }
      }
      auto jump_at = [&](int f, int g) {
        if (f < 0) {
          return bc == BoundaryKind::periodic ? faces[n_cells - 1][g].jump : -faces[1][g].jump;
        }
        if (f > n_cells) {
          return bc == BoundaryKind::periodic ? faces[1][g].jump : -faces[n_cells - 1][g].jump;
        }
        return faces[f][g].jump;
      };
      for (face = 0; face <= n_cells; ++face) {
        State sum{};
        for (int g = 0; g < 2; ++g) {
          const InterfaceStatePair<State> pair{faces[face][g].qL, faces[face][g].qR, axis, 1.0};
          const NeighborJumps nj{jump_at(face - 1, g), faces[face][g].jump, jump_at(face + 1, g)};
          const double c = local_courant(sys, pair, dt, h);
          sum += flic_flux(sys, pair, nj, dt, h, c, fp);
        }
        face_flux[face] = 0.5 * sum;
      }
    } catch (const AdmissibilityError& e) {
      throw AdmissibilityError(std::string(e.what()) + " at " + (along_x ? "x" : "z") +
                               "-face " + std::to_string(face) + ", line " + std::to_string(line));
    }
    const double inv_h = 1.0 / h;
    for (int k = 0; k < n_cells; ++k) {
      const State div = inv_h * (face_flux[k + 1] - face_flux[k]);
      State& out = along_x ? tendency[static_cast<std::size_t>(line) * nx + k]
                           : tendency[static_cast<std::size_t>(k) * nx + line];
      out -= div;
    }
  };

  for (int j = 0; j < nz; ++j) sweep(Axis::x, nx, j, bc_x);
  for (int i = 0; i < nx; ++i) sweep(Axis::z, nz, i, bc_z);
  return tendency;
}

}  // namespace layered
