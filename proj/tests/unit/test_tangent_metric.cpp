#include <gtest/gtest.h>

#include <cmath>

#include "weyl/sampling.hpp"
#include "weyl/tangent_metric.hpp"

using namespace weyl;

namespace {

AngleVector angles(std::initializer_list<double> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) v(k++) = x;
  return AngleVector::canonical(v);
}

}  // namespace

TEST(TangentMetric, HorizontalFieldClosedForm) {
  const auto a = angles({1.2, -0.4});
  const auto basis = buildBasis(2, AlgebraKind::FullUnitary);
  const auto t = dkappaHorizontal(a, basis[2].matrix);
  // a^-1 x a - x has squared norm 2 (1 - cos(d theta)) = 4 sin^2(d theta / 2).
  const double s = std::sin(0.5 * 1.6);
  EXPECT_NEAR(traceMetric(t.value, t.value).real(), 4 * s * s, 1e-15);
}

TEST(TangentMetric, ShapeChecks) {
  const auto a = angles({1.0, 0.0});
  const auto basis = buildBasis(2, AlgebraKind::FullUnitary);
  EXPECT_THROW(dkappaVertical(a, basis[2].matrix), InputError);
  EXPECT_THROW(dkappaHorizontal(a, basis[0].matrix), InputError);
  Matrix notUnitary = 2.0 * Matrix::Identity(2, 2);
  EXPECT_THROW(transportField(notUnitary, dkappaVertical(a, basis[0].matrix)), InputError);
}

TEST(TangentMetric, DiagonalWithClosedForms) {
  const auto a = angles({2.5, 0.7, -1.3});
  Rng rng(8);
  const auto m = metricComponents(a, buildBasis(3, AlgebraKind::FullUnitary), randomUnitary(3, rng));
  EXPECT_LT(m.maxOffDiagonal, 1e-13);
  EXPECT_LT(m.maxClosedFormResidual, 1e-13);
  EXPECT_NEAR(m.diagonal(0), 1.0, 1e-14);
  const double j = vandermonde(a);
  EXPECT_NEAR(m.sqrtDeterminant(), j * j, 1e-12);
  EXPECT_NEAR(m.inverseDiagonal()(3) * m.diagonal(3), 1.0, 1e-15);
}

TEST(TangentMetric, SingularAtCoincidentAngles) {
  EXPECT_THROW(metricComponents(angles({0.5, 0.5}), buildBasis(2, AlgebraKind::FullUnitary)),
               DegenerateError);
}

TEST(TangentMetric, SweepPasses) {
  for (int n : {2, 3, 4}) EXPECT_TRUE(verifyMetric(n, 30, 2).pass) << n;
}
