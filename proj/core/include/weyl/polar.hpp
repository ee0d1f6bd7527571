#pragma once

#include <cstdint>
#include <vector>

#include "weyl/matrix.hpp"
#include "weyl/report.hpp"
#include "weyl/stencil.hpp"

namespace weyl {

/// Eigenangles below this circular separation count as coincident.
inline constexpr double kDegeneracyEps = 1e-8;

/// Maps any real angle into (-pi, pi].
double wrapAngle(double theta);

/// Distance between two angles on the circle, in [0, pi].
double circularDistance(double a, double b);

/// min_{i != j} circularDistance(theta_i, theta_j); +inf when fewer than two
/// angles.
double minAngularGap(const RealVector& theta);

/// Eigenangles in canonical form: every entry in (-pi, pi], sorted so that
/// theta_1 >= theta_2 >= ... >= theta_N.
class AngleVector {
 public:
  AngleVector() = default;

  /// Wraps and sorts.
  static AngleVector canonical(RealVector raw);

  int n() const { return static_cast<int>(theta_.size()); }
  const RealVector& theta() const { return theta_; }
  double operator[](int j) const { return theta_(j); }

 private:
  explicit AngleVector(RealVector theta) : theta_(std::move(theta)) {}
  RealVector theta_;
};

struct CoincidentPair {
  int i = 0;  // 0-based
  int j = 0;
  double gap = 0.0;
};

struct DegeneracyReport {
  std::vector<CoincidentPair> coincidentPairs;
  bool empty() const { return coincidentPairs.empty(); }
};

DegeneracyReport degeneracies(const RealVector& theta, double eps = kDegeneracyEps);

/// v = u diag(e^{i theta}) u^dagger.
struct PolarForm {
  Matrix u;
  AngleVector angles;
  bool regular = false;
  double minGap = 0.0;

  Matrix reconstruct() const;
};

/// Weyl polar decomposition of a unitary matrix.
///
/// Built on the complex Schur form, so u is unitary even at degenerate
/// points. Columns of u are gauge-fixed: the largest-magnitude entry of each
/// column is real and positive. Angles come out canonical; exact ties keep
/// the column whose largest entry sits highest first.
///
/// Throws InputError when ||v^dagger v - I|| >= 1e-10, std::runtime_error
/// when the Schur iteration fails.
PolarForm polarDecompose(const Matrix& v);

/// J = prod_{i<j} 2 sin((theta_i - theta_j)/2). Zero at coincident angles.
double vandermonde(const RealVector& theta);
double vandermonde(const AngleVector& angles);

/// prod_{i<j} 4 sin^2((theta_i - theta_j)/2), the polar volume density J^2.
double jacobianDensity(const RealVector& theta);

/// R_N = N(N^2 - 1)/12.
double curvatureConstant(int n);

/// Sum_j (d^2 J / d theta_j^2) / J by central differences.
double curvatureSum(const RealVector& theta, const StencilConfig& cfg);

/// Checks curvatureSum == -R_N at `samples` random regular angle vectors
/// (min gap 0.3). Tolerance 1e-6 absolute. n in 2..6.
VerificationReport verifyCurvatureIdentity(int n, int samples, std::uint64_t seed,
                                           const StencilConfig& cfg = {});

/// Checks the radial rewriting
///   sum_j J^-2 d_j (J^2 d_j f) = sum_j (J^-1 d_j^2 (J f) - f J^-1 d_j^2 J)
/// on random trigonometric test functions. The left side differentiates the
/// flux J^2 d_j f numerically (no analytic log-derivative of J^2).
/// Relative tolerance 1e-5.
VerificationReport verifyRadialRewriting(int n, int functions, int pointsPerFunction,
                                         std::uint64_t seed, const StencilConfig& cfg = {});

/// Both sides of -4 sin((x-y)/2) sin((y-z)/2) sin((z-x)/2)
///   = sin(x-y) + sin(y-z) + sin(z-x).
double trigIdentityLhs(double x, double y, double z);
double trigIdentityRhs(double x, double y, double z);

/// Tolerance 1e-13 absolute.
VerificationReport verifyTrigIdentity(int samples, std::uint64_t seed);

/// Nearest angle vector on the SU(N) torus sum theta_j = 0 (mod 2 pi),
/// reached by one uniform shift of every component, then re-canonicalized.
AngleVector projectSU(const AngleVector& angles);

/// The uniform shift applied by projectSU.
double suShift(const RealVector& theta);

/// Decompose `samples` Haar unitaries and rebuild them. Max reconstruction
/// error < 1e-10; a second pass with the same seed must give bit-identical
/// angles and eigenvectors.
VerificationReport verifyPolarRoundTrip(int n, int samples, std::uint64_t seed);

}  // namespace weyl
