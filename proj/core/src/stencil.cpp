#include "weyl/stencil.hpp"

#include <string>

namespace weyl {

void StencilConfig::validate() const {
  if (!(h >= 1e-4 && h <= 1e-1)) {
    throw std::invalid_argument("stencil step h=" + std::to_string(h) + " outside [1e-4, 1e-1]");
  }
  if (order != 2 && order != 4) {
    throw std::invalid_argument("stencil order must be 2 or 4, got " + std::to_string(order));
  }
}

}  // namespace weyl
