#pragma once

#include <cstdint>

#include "weyl/lie_basis.hpp"
#include "weyl/polar.hpp"

namespace weyl {

/// Tangent vector at a = diag(e^{i theta}), stored as the algebra element z
/// with tangent a z.
struct TangentVectorAtTorus {
  AngleVector base;
  Matrix value;
};

/// Vertical directions pass through unchanged. Throws InputError unless y is
/// diagonal and skew-hermitian.
TangentVectorAtTorus dkappaVertical(const AngleVector& angles, const Matrix& y);

/// Horizontal directions map to a^{-1} x a - x. Throws InputError unless x
/// is skew-hermitian with zero diagonal.
TangentVectorAtTorus dkappaHorizontal(const AngleVector& angles, const Matrix& x);

/// u z u^{-1}. Throws InputError for non-unitary u.
Matrix transportField(const Matrix& u, const TangentVectorAtTorus& tangent);

/// Metric of the polar coordinates in the frame of a generator basis.
struct MetricComponents {
  RealVector diagonal;    // g_kk from the trace metric, basis order
  RealVector closedForm;  // 1 (vertical) or 4 sin^2((theta_i - theta_j)/2)
  double maxOffDiagonal = 0.0;
  double maxClosedFormResidual = 0.0;

  /// g^kk = 1 / g_kk.
  RealVector inverseDiagonal() const;

  /// sqrt(prod_k g_kk).
  double sqrtDeterminant() const;
};

/// Throws DegenerateError when two angles coincide (metric singular).
MetricComponents metricComponents(const AngleVector& angles, const GeneratorBasis& basis);

/// Same, with every field transported to v = u a u^{-1} before the trace
/// metric is taken.
MetricComponents metricComponents(const AngleVector& angles, const GeneratorBasis& basis,
                                  const Matrix& u);

/// Random regular angles and a Haar u per sample, u(N) basis. Checks
/// off-diagonal |g_kl| < 1e-12, |g_kk - closed form| < 1e-12 and
/// sqrt(prod g_kk) = J^2 within 1e-10 relative.
VerificationReport verifyMetric(int n, int samples, std::uint64_t seed);

}  // namespace weyl
