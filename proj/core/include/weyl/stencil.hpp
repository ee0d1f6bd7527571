#pragma once

#include <stdexcept>

namespace weyl {

/// Central finite-difference configuration.
struct StencilConfig {
  double h = 1e-2;
  int order = 4;  // 2 or 4

  /// Throws std::invalid_argument unless 1e-4 <= h <= 1e-1 and order is 2 or 4.
  void validate() const;
};

/// g''(0) by central differences. `g` maps a real offset to any value type
/// closed under +, - and scalar multiplication.
template <typename F>
auto secondDerivative(F&& g, const StencilConfig& cfg) {
  const double h = cfg.h;
  if (cfg.order == 2) return (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
  return (-g(2.0 * h) + 16.0 * g(h) - 30.0 * g(0.0) + 16.0 * g(-h) - g(-2.0 * h)) /
         (12.0 * h * h);
}

/// g'(0) by central differences.
template <typename F>
auto firstDerivative(F&& g, const StencilConfig& cfg) {
  const double h = cfg.h;
  if (cfg.order == 2) return (g(h) - g(-h)) / (2.0 * h);
  return (-g(2.0 * h) + 8.0 * g(h) - 8.0 * g(-h) + g(-2.0 * h)) / (12.0 * h);
}

}  // namespace weyl
