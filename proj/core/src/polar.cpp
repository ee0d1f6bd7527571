#include "weyl/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "weyl/sampling.hpp"

namespace weyl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitaryTol = 1e-10;
constexpr double kCurvatureTol = 1e-6;
// Same tolerance as the radial-form comparison in the Laplacian module; the
// outer derivative of the flux is the only finite difference left.
constexpr double kRewritingTol = 1e-5;
constexpr double kTrigTol = 1e-13;
// Sample points for the finite-difference checks stay this far from the
// singular set.
constexpr double kSampleGap = 0.3;

// Row of the largest-magnitude entry; entries within 1e-12 of the maximum
// count as tied and the first one wins, so rounding noise cannot flip it.
Eigen::Index dominantRow(const Eigen::VectorXcd& col) {
  const double top = col.cwiseAbs().maxCoeff();
  for (Eigen::Index r = 0; r < col.size(); ++r)
    if (std::abs(col(r)) >= top - 1e-12) return r;
  return 0;
}

RealVector unit(int n, int j) {
  RealVector e = RealVector::Zero(n);
  e(j) = 1.0;
  return e;
}

}  // namespace

double wrapAngle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double circularDistance(double a, double b) { return std::abs(wrapAngle(a - b)); }

double minAngularGap(const RealVector& theta) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    for (Eigen::Index j = i + 1; j < theta.size(); ++j)
      gap = std::min(gap, circularDistance(theta(i), theta(j)));
  return gap;
}

AngleVector AngleVector::canonical(RealVector raw) {
  for (Eigen::Index j = 0; j < raw.size(); ++j) raw(j) = wrapAngle(raw(j));
  std::sort(raw.data(), raw.data() + raw.size(), std::greater<>());
  return AngleVector(std::move(raw));
}

DegeneracyReport degeneracies(const RealVector& theta, double eps) {
  DegeneracyReport report;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    for (Eigen::Index j = i + 1; j < theta.size(); ++j) {
      const double gap = circularDistance(theta(i), theta(j));
      if (gap <= eps)
        report.coincidentPairs.push_back({static_cast<int>(i), static_cast<int>(j), gap});
    }
  }
  return report;
}

Matrix PolarForm::reconstruct() const {
  return u * torusElement(angles.theta()) * u.adjoint();
}

PolarForm polarDecompose(const Matrix& v) {
  requireSquare(v, "polarDecompose");
  const double residual = unitarityResidual(v);
  if (!(residual < kUnitaryTol)) {
    throw InputError("polarDecompose: input is not unitary (||v'v - I|| = " +
                     std::to_string(residual) + ")");
  }
  const Eigen::Index n = v.rows();

  Eigen::ComplexSchur<Matrix> schur(v);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("polarDecompose: Schur iteration did not converge");
  }
  // v is normal, so the triangular factor is diagonal up to rounding and the
  // Schur vectors are eigenvectors.
  Matrix q = schur.matrixU();
  const Matrix& t = schur.matrixT();

  RealVector raw(n);
  std::vector<Eigen::Index> lead(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    raw(j) = wrapAngle(std::arg(t(j, j)));
    lead[j] = dominantRow(q.col(j));
    const Complex top = q(lead[j], j);
    q.col(j) *= std::conj(top) / std::abs(top);
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (raw(a) != raw(b)) return raw(a) > raw(b);
    return lead[a] < lead[b];
  });

  PolarForm pf;
  pf.u.resize(n, n);
  RealVector sorted(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    pf.u.col(j) = q.col(order[j]);
    sorted(j) = raw(order[j]);
  }
  pf.angles = AngleVector::canonical(std::move(sorted));
  pf.minGap = minAngularGap(pf.angles.theta());
  pf.regular = pf.minGap > kDegeneracyEps;
  return pf;
}

double vandermonde(const RealVector& theta) {
  double j = 1.0;
  for (Eigen::Index a = 0; a < theta.size(); ++a)
    for (Eigen::Index b = a + 1; b < theta.size(); ++b)
      j *= 2.0 * std::sin(0.5 * (theta(a) - theta(b)));
  return j;
}

double vandermonde(const AngleVector& angles) { return vandermonde(angles.theta()); }

double jacobianDensity(const RealVector& theta) {
  double d = 1.0;
  for (Eigen::Index a = 0; a < theta.size(); ++a) {
    for (Eigen::Index b = a + 1; b < theta.size(); ++b) {
      const double s = std::sin(0.5 * (theta(a) - theta(b)));
      d *= 4.0 * s * s;
    }
  }
  return d;
}

double curvatureConstant(int n) {
  if (n < 1) throw std::invalid_argument("curvatureConstant: n must be >= 1");
  return n * (static_cast<double>(n) * n - 1.0) / 12.0;
}

double curvatureSum(const RealVector& theta, const StencilConfig& cfg) {
  const int n = static_cast<int>(theta.size());
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const RealVector e = unit(n, j);
    sum += secondDerivative([&](double s) { return vandermonde(RealVector(theta + s * e)); }, cfg);
  }
  return sum / vandermonde(theta);
}

VerificationReport verifyCurvatureIdentity(int n, int samples, std::uint64_t seed,
                                           const StencilConfig& cfg) {
  if (n < 2 || n > 6) throw std::invalid_argument("verifyCurvatureIdentity: n must be in 2..6");
  cfg.validate();
  VerificationReport report;
  report.check = "curvature-constant-N" + std::to_string(n);
  report.tolerance = kCurvatureTol;
  report.seed = seed;

  Rng rng(seed);
  const double expected = -curvatureConstant(n);
  for (int s = 0; s < samples; ++s) {
    const RealVector theta = randomRegularAngles(n, kSampleGap, rng);
    const double measured = curvatureSum(theta, cfg);
    ++report.samples;
    report.record(std::abs(measured - expected), std::abs(expected), false,
                  "sample " + std::to_string(s));
  }
  return report;
}

VerificationReport verifyRadialRewriting(int n, int functions, int pointsPerFunction,
                                         std::uint64_t seed, const StencilConfig& cfg) {
  if (n < 2) throw std::invalid_argument("verifyRadialRewriting: n must be >= 2");
  cfg.validate();
  VerificationReport report;
  report.check = "radial-rewriting-N" + std::to_string(n);
  report.tolerance = kRewritingTol;
  report.seed = seed;

  Rng rng(seed);
  std::uniform_int_distribution<int> wave(-2, 2);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  for (int fi = 0; fi < functions; ++fi) {
    // f(theta) = sum_m c_m exp(i k_m . theta), three random modes.
    std::vector<RealVector> ks;
    std::vector<Complex> cs;
    for (int m = 0; m < 3; ++m) {
      RealVector k(n);
      for (int j = 0; j < n; ++j) k(j) = wave(rng);
      ks.push_back(k);
      cs.emplace_back(coeff(rng), coeff(rng));
    }
    const auto f = [&](const RealVector& th) {
      Complex total = 0.0;
      for (std::size_t m = 0; m < ks.size(); ++m)
        total += cs[m] * std::polar(1.0, ks[m].dot(th));
      return total;
    };
    // d f / d theta_j in closed form.
    const auto df = [&](const RealVector& th, int j) {
      Complex total = 0.0;
      for (std::size_t m = 0; m < ks.size(); ++m)
        total += Complex(0.0, ks[m](j)) * cs[m] * std::polar(1.0, ks[m].dot(th));
      return total;
    };

    for (int p = 0; p < pointsPerFunction; ++p) {
      const RealVector theta = randomRegularAngles(n, kSampleGap, rng);
      const double j0 = vandermonde(theta);
      Complex lhs = 0.0;
      Complex rhs = 0.0;
      // Errors are measured against the size of the summands, since the sum
      // itself can cancel to near zero.
      double termSize = 0.0;
      for (int j = 0; j < n; ++j) {
        const RealVector e = unit(n, j);
        const auto flux = [&](double s) {
          const RealVector at = theta + s * e;
          return jacobianDensity(at) * df(at, j);
        };
        lhs += firstDerivative(flux, cfg);
        const Complex term = secondDerivative(
            [&](double s) {
              const RealVector at = theta + s * e;
              return vandermonde(at) * f(at);
            },
            cfg);
        rhs += term;
        termSize += std::abs(term / j0);
        rhs -= f(theta) *
               secondDerivative([&](double s) { return vandermonde(RealVector(theta + s * e)); },
                                cfg);
      }
      lhs /= jacobianDensity(theta);
      rhs /= j0;
      ++report.samples;
      report.record(std::abs(lhs - rhs), std::max({std::abs(rhs), termSize, 1.0}), true,
                    "function " + std::to_string(fi) + " point " + std::to_string(p));
    }
  }
  return report;
}

double trigIdentityLhs(double x, double y, double z) {
  return -4.0 * std::sin(0.5 * (x - y)) * std::sin(0.5 * (y - z)) * std::sin(0.5 * (z - x));
}

double trigIdentityRhs(double x, double y, double z) {
  return std::sin(x - y) + std::sin(y - z) + std::sin(z - x);
}

VerificationReport verifyTrigIdentity(int samples, std::uint64_t seed) {
  VerificationReport report;
  report.check = "trig-identity";
  report.tolerance = kTrigTol;
  report.seed = seed;
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
  for (int s = 0; s < samples; ++s) {
    const double x = angle(rng), y = angle(rng), z = angle(rng);
    ++report.samples;
    report.record(std::abs(trigIdentityLhs(x, y, z) - trigIdentityRhs(x, y, z)), 1.0, false,
                  "triple " + std::to_string(s));
  }
  return report;
}

double suShift(const RealVector& theta) {
  const double total = theta.sum();
  const int n = static_cast<int>(theta.size());
  if (n == 0) return 0.0;
  const double winding = std::round(total / (2.0 * kPi));
  return (2.0 * kPi * winding - total) / n;
}

AngleVector projectSU(const AngleVector& angles) {
  const double shift = suShift(angles.theta());
  return AngleVector::canonical((angles.theta().array() + shift).matrix());
}

VerificationReport verifyPolarRoundTrip(int n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.check = "polar-round-trip-N" + std::to_string(n);
  report.tolerance = kUnitaryTol;
  report.seed = seed;
  Rng first(seed);
  Rng second(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix v = randomUnitary(n, first);
    const PolarForm pf = polarDecompose(v);
    ++report.samples;
    report.record(maxNorm(pf.reconstruct() - v), 1.0, false, "sample " + std::to_string(s));
    const PolarForm again = polarDecompose(randomUnitary(n, second));
    if (again.angles.theta() != pf.angles.theta() || again.u != pf.u) {
      report.fail("sample " + std::to_string(s) + ": rerun is not bit-identical");
    }
  }
  return report;
}

}  // namespace weyl
