#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "weyl/laplacian.hpp"

using namespace weyl;

namespace {

const Complex I(0.0, 1.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 0.1); }

}  // namespace

TEST(LeftInvariant, ConstantAndTraceExamples) {
  Rng rng(1);
  const Matrix v = randomUnitary(3, rng);
  const Matrix z = randomSkewHermitian(3, rng);
  EXPECT_EQ(leftInvariantDerivative2(constantFunction(1.0), v, z), Complex(0.0));

  // Tr v on U(2) at v = I along iT1: d^2/dt^2 (e^{it} + 1) = -1.
  const auto basis = buildBasis(2, AlgebraKind::FullUnitary);
  const Complex d = leftInvariantDerivative2(characterFunction(definingRep(2)),
                                             Matrix::Identity(2, 2), basis[0].matrix);
  EXPECT_NEAR(d.real(), -1.0, 1e-8);
  EXPECT_NEAR(d.imag(), 0.0, 1e-8);
}

TEST(LeftInvariant, MatrixElementsMatchAnalyticSecondDerivative) {
  Rng rng(2);
  const auto rep = symmetricSquare(definingRep(3));
  const Matrix v = randomUnitary(3, rng);
  Matrix z = randomSkewHermitian(3, rng);
  z /= std::sqrt(traceMetric(z, z).real());
  const Matrix dz = rep.algebra(z);
  const Matrix expected = rep.group(v) * dz * dz;
  for (int r = 0; r < rep.dim(); ++r)
    for (int c = 0; c < rep.dim(); ++c)
      EXPECT_LT(std::abs(leftInvariantDerivative2(matrixElement(rep, r, c), v, z) - expected(r, c)),
                1e-7);
  EXPECT_THROW(leftInvariantDerivative2(matrixElement(rep, 0, 0), v, Matrix::Identity(3, 3)),
               InputError);
  EXPECT_THROW(matrixElement(rep, 6, 0), std::out_of_range);
}

TEST(Casimir, DefiningMatrixElementsAreEigenfunctions) {
  Rng rng(3);
  const Matrix v = randomUnitary(3, rng);
  const auto u3 = buildBasis(3, AlgebraKind::FullUnitary);
  const auto rep = definingRep(3);
  for (int r = 0; r < 3; ++r) {
    const auto psi = matrixElement(rep, r, (r + 1) % 3);
    EXPECT_LT(std::abs(casimirLaplacian(psi, v, u3) + 3.0 * psi(v)), 1e-7);
  }
}

TEST(Radial, DefiningCharacterOnU2) {
  RealVector th(2);
  th << 1.1, -0.9;
  const RadialFunction f = characterRadial(Partition::parse("1,0"));
  EXPECT_LT(std::abs(radialLaplacian(f, th) + 2.0 * f(th)), 1e-8);
  EXPECT_LT(symmetryResidual(f, th), 1e-12);
}

TEST(Radial, VandermondeItselfAgreesAcrossForms) {
  RealVector th(3);
  th << 2.2, 0.4, -1.5;
  const RadialFunction j{"J", [](const RealVector& t) { return Complex(vandermonde(t)); }, false};
  EXPECT_LT(rel(radialLaplacian(j, th), radialLaplacianAlt(j, th)), 1e-5);
}

TEST(Radial, RefusesPointsCloserThanTenSteps) {
  RealVector th(2);
  th << 0.05, 0.0;
  const RadialFunction f = characterRadial(Partition::parse("1,0"));
  EXPECT_THROW(radialLaplacian(f, th), DegenerateError);
  EXPECT_THROW(radialLaplacianAlt(f, th), DegenerateError);
}

TEST(Polar, MatchesCasimirOnOneElement) {
  Rng rng(4);
  const Matrix v = randomRegularUnitary(3, 0.3, rng);
  const auto psi = matrixElement(definingRep(3), 0, 2);
  const auto pl = polarLaplacian(psi, v);
  ASSERT_EQ(pl.angular.size(), 3u);
  const Complex casimir = casimirLaplacian(psi, v, buildBasis(3, AlgebraKind::FullUnitary));
  EXPECT_LT(rel(pl.total, casimir), 5e-4);
  EXPECT_LT(rel(pl.totalAlt, casimir), 5e-4);
  EXPECT_LT(rel(pl.total, -3.0 * psi(v)), 5e-4);
}

TEST(Polar, OrderTwoStencilAlsoAgrees) {
  Rng rng(6);
  StencilConfig cfg;
  cfg.order = 2;
  cfg.h = 1e-3;
  const Matrix v = randomRegularUnitary(2, 0.3, rng);
  const auto psi = matrixElement(definingRep(2), 1, 0);
  EXPECT_LT(rel(fullLaplacian(psi, v, cfg), casimirLaplacian(psi, v, buildBasis(2, AlgebraKind::FullUnitary), cfg)), 1e-4);
}

TEST(Polar, RejectsSingularPointsAndBadPairs) {
  const auto psi = matrixElement(definingRep(2), 0, 0);
  EXPECT_THROW(polarLaplacian(psi, Matrix::Identity(2, 2)), DegenerateError);
  Rng rng(7);
  const auto pf = polarDecompose(randomRegularUnitary(3, 0.3, rng));
  EXPECT_THROW(angularTerm(psi, pf, 2, 1), std::out_of_range);
  StencilConfig bad;
  bad.h = 0.5;
  EXPECT_THROW(polarLaplacian(psi, randomRegularUnitary(2, 0.3, rng), bad), std::invalid_argument);
}

TEST(Polar, HermitianBookkeepingPerPair) {
  Rng rng(8);
  const auto pf = polarDecompose(randomRegularUnitary(3, 0.3, rng));
  const auto psi = matrixElement(definingRep(3), 1, 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      EXPECT_LT(rel(angularTermHermitian(psi, pf, i, j), angularTerm(psi, pf, i, j)), 1e-10);
}

TEST(Polar, ClassFunctionsHaveNoAngularPart) {
  Rng rng(9);
  const Matrix v = randomRegularUnitary(3, 0.3, rng);
  const auto pl = polarLaplacian(characterFunction(definingRep(3)), v);
  for (const Complex a : pl.angular) EXPECT_LT(std::abs(a), 1e-8);
}

TEST(SpecialUnitary, RoutesAgreeOnDefiningElements) {
  Rng rng(10);
  const Matrix v = randomRegularUnitary(3, 0.3, rng, true);
  const auto r = suLaplacianCheck(matrixElement(definingRep(3), 0, 1), v);
  EXPECT_LT(r.maxRelDiff, 5e-4);
  EXPECT_LT(rel(r.casimir, oracle::definingCasimir(3, true) * r.value), 1e-6);
  EXPECT_THROW(suLaplacianCheck(matrixElement(definingRep(3), 0, 1), I * v), InputError);
}

TEST(Sweeps, SmallRuns) {
  EXPECT_TRUE(verifyMainTheorem(definingRep(2), 5, 1).pass);
  EXPECT_TRUE(verifyMainTheorem(antisymmetricSquare(definingRep(3)), 3, 1).pass);
  EXPECT_TRUE(verifyRadialForms(4, 3, 1).pass);
  EXPECT_TRUE(verifyHermitianBookkeeping(2, 5, 1).pass);
  EXPECT_TRUE(verifySuRoute(2, 3, 1).pass);
}

TEST(Sweeps, CharacterEigenvalues) {
  const auto eig = measureCharacterEigenvalue(Partition::parse("2,0,0"), 10, 3);
  std::mt19937_64 orng(3);
  EXPECT_NEAR(eig.mean, oracle::squareCasimir(3, true, orng), 1e-6);
  EXPECT_EQ(eig.values.size(), 10u);
  EXPECT_TRUE(verifyCharacterEigenfunction(Partition::parse("0,0,0"), 10, 3).pass);
  // No representation is built for (2,1,0); only constancy is checked.
  EXPECT_TRUE(verifyCharacterEigenfunction(Partition::parse("2,1,0"), 10, 3).pass);
}
