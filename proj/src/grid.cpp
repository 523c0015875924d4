#include "layered/grid.hpp"

#include <string>

namespace layered {

std::string_view to_string(BoundaryKind kind) {
  return kind == BoundaryKind::wall ? "wall" : "periodic";
}

BoundaryKind parse_boundary(std::string_view text) {
  if (text == "wall") return BoundaryKind::wall;
  if (text == "periodic") return BoundaryKind::periodic;
  throw ConfigError("invalid boundary kind '" + std::string(text) + "'; valid: {wall, periodic}");
}

}  // namespace layered
