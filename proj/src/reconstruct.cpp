#include "layered/reconstruct.hpp"

namespace layered {

void WenoParams::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (!(r_exponent > 0.0)) throw ConfigError("r_exponent must be > 0");
  if (!(lambda_center > 0.0) || !(lambda_side > 0.0)) {
    throw ConfigError("WENO linear weights must be > 0");
  }
}

}  // namespace layered
