#include "weyl/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weyl/polar.hpp"

namespace weyl {

Matrix randomUnitary(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Matrix randomSpecialUnitary(int n, Rng& rng) {
  Matrix q = randomUnitary(n, rng);
  const double phase = std::arg(q.determinant());
  return std::polar(1.0, -phase / n) * q;
}

Matrix randomSkewHermitian(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (a - a.adjoint());
}

RealVector randomAngles(int n, Rng& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  RealVector theta(n);
  for (int j = 0; j < n; ++j) theta(j) = wrapAngle(angle(rng));
  return theta;
}

RealVector randomRegularAngles(int n, double minGap, Rng& rng) {
  if (n * minGap >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("randomRegularAngles: gap too large for n points");
  }
  for (;;) {
    RealVector theta = randomAngles(n, rng);
    if (minAngularGap(theta) > minGap) return theta;
  }
}

}  // namespace weyl
