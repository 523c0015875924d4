#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "layered/errors.hpp"
#include "layered/state.hpp"

namespace layered {

enum class Axis { x, y, z };

enum class BoundaryKind { wall, periodic };

std::string_view to_string(BoundaryKind kind);
BoundaryKind parse_boundary(std::string_view text);

/// Uniform x-z cell geometry shared by every layer.
struct Grid {
  int nx = 0;
  int nz = 0;
  double x_min = 0.0;
  double z_min = 0.0;
  double dx = 1.0;
  double dz = 1.0;

  double x_center(int i) const { return x_min + (i + 0.5) * dx; }
  double z_center(int j) const { return z_min + (j + 0.5) * dz; }
  double x_max() const { return x_min + nx * dx; }
  double z_max() const { return z_min + nz * dz; }
};

inline constexpr int kGhostWidth = 2;

/// Cell-centred field on an nx-by-nz grid with a ghost ring. Indices (i, j)
/// run over [-ghost, n + ghost); interior cells are [0, nx) x [0, nz).
template <std::size_t N>
class Field {
 public:
  using value_type = Vec<N>;

  Field() = default;
  Field(int nx, int nz, int ghost = kGhostWidth)
      : nx_(nx), nz_(nz), ghost_(ghost),
        data_(static_cast<std::size_t>(nx + 2 * ghost) * static_cast<std::size_t>(nz + 2 * ghost)) {
    if (nx < 1 || nz < 1 || ghost < 0) throw ConfigError("Field: invalid dimensions");
  }

  int nx() const { return nx_; }
  int nz() const { return nz_; }
  int ghost() const { return ghost_; }

  value_type& at(int i, int j) { return data_[index(i, j)]; }
  const value_type& at(int i, int j) const { return data_[index(i, j)]; }

  std::vector<value_type>& data() { return data_; }
  const std::vector<value_type>& data() const { return data_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * static_cast<std::size_t>(nx_ + 2 * ghost_) +
           static_cast<std::size_t>(i + ghost_);
  }

  int nx_ = 0;
  int nz_ = 0;
  int ghost_ = 0;
  std::vector<value_type> data_;
};

using LayerField = Field<5>;

/// Source cell of ghost index k along an axis of n interior cells. For walls
/// the index is folded back by reflection; `mirrored` is true when an odd
/// number of reflections was applied.
struct GhostSource {
  int index;
  bool mirrored;
};

inline GhostSource ghost_source(int k, int n, BoundaryKind kind) {
  auto floor_div = [](int a, int b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); };
  const int q = floor_div(k, n);
  const int r = k - q * n;
  if (kind == BoundaryKind::periodic) return {r, false};
  const bool odd = (q % 2) != 0;
  return {odd ? n - 1 - r : r, odd};
}

/// Fills the ghost ring: x ghosts on interior rows first, then z ghosts over
/// the full width (which also covers the corners). `mirror(state, axis)`
/// returns the wall image of a state.
template <std::size_t N, class Mirror>
void fill_ghosts(Field<N>& field, BoundaryKind bc_x, BoundaryKind bc_z, Mirror&& mirror) {
  const int nx = field.nx();
  const int nz = field.nz();
  const int g = field.ghost();
  for (int j = 0; j < nz; ++j) {
    for (int i = -g; i < nx + g; ++i) {
      if (i >= 0 && i < nx) continue;
      const GhostSource src = ghost_source(i, nx, bc_x);
      const Vec<N>& q = field.at(src.index, j);
      field.at(i, j) = src.mirrored ? mirror(q, Axis::x) : q;
    }
  }
  for (int j = -g; j < nz + g; ++j) {
    if (j >= 0 && j < nz) continue;
    const GhostSource src = ghost_source(j, nz, bc_z);
    for (int i = -g; i < nx + g; ++i) {
      const Vec<N>& q = field.at(i, src.index);
      field.at(i, j) = src.mirrored ? mirror(q, Axis::z) : q;
    }
  }
}

}  // namespace layered
