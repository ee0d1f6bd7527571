#include "weyl/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace weyl {

namespace {

constexpr double kMainTheoremTol = 5e-4;
constexpr double kEigenSpreadTol = 1e-4;
constexpr double kEigenOracleTol = 1e-4;
constexpr double kRadialFormsTol = 1e-5;
constexpr double kBookkeepingTol = 1e-10;
constexpr double kSuEigenTol = 1e-3;
constexpr double kSampleGap = 0.3;
constexpr double kScaleFloor = 0.1;
// Character sample points with |chi| below this are skipped so the ratio
// stays well conditioned.
constexpr double kCharacterFloor = 0.1;

RealVector unit(Eigen::Index n, Eigen::Index j) {
  RealVector e = RealVector::Zero(n);
  e(j) = 1.0;
  return e;
}

void requireRadialMargin(const RealVector& theta, const StencilConfig& cfg,
                         const std::string& what) {
  cfg.validate();
  const double gap = minAngularGap(theta);
  if (!(gap > 10.0 * cfg.h)) {
    throw DegenerateError(what + ": eigenangle gap " + std::to_string(gap) +
                          " too small for stencil step " + std::to_string(cfg.h));
  }
}

// d^2/dt^2 psi(e^{tX'} v e^{-tX'}) at t = 0, X' = u x u^dagger.
Complex conjugationDerivative2(const GroupFunction& psi, const Matrix& v, const Matrix& u,
                               const Matrix& x, const StencilConfig& cfg) {
  const OneParameterSubgroup flow(u * x * u.adjoint());
  return secondDerivative(
      [&](double t) -> Complex {
        const Matrix g = flow(t);
        return psi(g * v * g.adjoint());
      },
      cfg);
}

double halfAngleSinSquared(const PolarForm& pf, int i, int j) {
  const double s = std::sin(0.5 * (pf.angles[i - 1] - pf.angles[j - 1]));
  return s * s;
}

void requirePair(const PolarForm& pf, int i, int j, const StencilConfig& cfg,
                 const std::string& what) {
  cfg.validate();
  const int n = pf.angles.n();
  if (i < 1 || j <= i || j > n) {
    throw std::out_of_range(what + ": pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") invalid for N=" + std::to_string(n));
  }
  const double gap = circularDistance(pf.angles[i - 1], pf.angles[j - 1]);
  if (!(gap > 10.0 * cfg.h)) {
    throw DegenerateError(what + ": eigenangles " + std::to_string(i) + " and " +
                          std::to_string(j) + " nearly coincide");
  }
}

struct HorizontalDirections {
  Matrix xk;
  Matrix xl;
};

// X_k = (E_ij - E_ji)/sqrt2, X_l = i(E_ij + E_ji)/sqrt2.
HorizontalDirections horizontalDirections(int n, int i, int j) {
  const Matrix eij = elementaryMatrix(n, i, j);
  const Matrix eji = elementaryMatrix(n, j, i);
  const double r = 1.0 / std::sqrt(2.0);
  return {r * (eij - eji), Complex(0.0, r) * (eij + eji)};
}

double scaleOf(Complex value) { return std::max(std::abs(value), kScaleFloor); }

// Least-squares eigenvalue sum conj(psi) L psi / sum |psi|^2.
Complex rayleigh(const std::vector<Complex>& values, const std::vector<Complex>& images) {
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    num += std::conj(values[k]) * images[k];
    den += std::norm(values[k]);
  }
  return num / den;
}

}  // namespace

GroupFunction constantFunction(Complex value) {
  return {"constant", [value](const Matrix&) { return value; }};
}

GroupFunction matrixElement(const Representation& rep, int row, int col) {
  if (row < 0 || col < 0 || row >= rep.dim() || col >= rep.dim()) {
    throw std::out_of_range("matrixElement: index outside representation");
  }
  return {rep.label() + "[" + std::to_string(row) + "," + std::to_string(col) + "]",
          [rep, row, col](const Matrix& v) { return rep.group(v)(row, col); }};
}

GroupFunction characterFunction(const Representation& rep) {
  return {"chi_" + rep.label(), [rep](const Matrix& v) { return rep.group(v).trace(); }};
}

GroupFunction matrixCoefficient(const Representation& rep, const Matrix& coefficients) {
  if (coefficients.rows() != rep.dim() || coefficients.cols() != rep.dim()) {
    throw InputError("matrixCoefficient: coefficient matrix has the wrong shape");
  }
  return {"coeff_" + rep.label(), [rep, coefficients](const Matrix& v) {
            return coefficients.cwiseProduct(rep.group(v)).sum();
          }};
}

GroupFunction centerProjected(const GroupFunction& psi, int n) {
  return {psi.label + "|SU", [psi, n](const Matrix& w) {
            const double phase = std::arg(w.determinant());
            return psi(std::polar(1.0, -phase / n) * w);
          }};
}

RadialFunction torusRestriction(const GroupFunction& psi, const Matrix& u) {
  return {psi.label + "|torus",
          [psi, u](const RealVector& theta) {
            return psi(u * torusElement(theta) * u.adjoint());
          },
          false};
}

RadialFunction characterRadial(const Partition& lambda) {
  return {"schur(" + lambda.toString() + ")",
          [lambda](const RealVector& theta) { return schurCharacter(lambda, theta); }, true};
}

double symmetryResidual(const RadialFunction& f, const RealVector& theta) {
  const Complex base = f(theta);
  double worst = 0.0;
  for (Eigen::Index a = 0; a < theta.size(); ++a) {
    for (Eigen::Index b = a + 1; b < theta.size(); ++b) {
      RealVector swapped = theta;
      std::swap(swapped(a), swapped(b));
      worst = std::max(worst, std::abs(f(swapped) - base));
    }
  }
  return worst;
}

Complex leftInvariantDerivative2(const GroupFunction& psi, const Matrix& v, const Matrix& z,
                                 const StencilConfig& cfg) {
  cfg.validate();
  requireSameDim(v, z, "leftInvariantDerivative2");
  if (skewHermitianResidual(z) > 1e-12) {
    throw InputError("leftInvariantDerivative2: direction is not skew-hermitian");
  }
  const OneParameterSubgroup flow(z);
  return secondDerivative([&](double t) -> Complex { return psi(v * flow(t)); }, cfg);
}

Complex casimirLaplacian(const GroupFunction& psi, const Matrix& v, const GeneratorBasis& basis,
                         const StencilConfig& cfg) {
  Complex total = 0.0;
  for (const Generator& g : basis.generators())
    total += leftInvariantDerivative2(psi, v, g.matrix, cfg);
  return total;
}

Complex radialLaplacian(const RadialFunction& f, const RealVector& theta,
                        const StencilConfig& cfg) {
  requireRadialMargin(theta, cfg, "radialLaplacian");
  const Eigen::Index n = theta.size();
  Complex total = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const RealVector e = unit(n, j);
    const auto line = [&](double s) -> Complex { return f(RealVector(theta + s * e)); };
    double logDerivative = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != j) logDerivative += 1.0 / std::tan(0.5 * (theta(j) - theta(k)));
    total += secondDerivative(line, cfg) + logDerivative * firstDerivative(line, cfg);
  }
  return total;
}

Complex radialLaplacianAlt(const RadialFunction& f, const RealVector& theta,
                           const StencilConfig& cfg) {
  requireRadialMargin(theta, cfg, "radialLaplacianAlt");
  const Eigen::Index n = theta.size();
  Complex total = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const RealVector e = unit(n, j);
    total += secondDerivative(
        [&](double s) -> Complex {
          const RealVector at = theta + s * e;
          return vandermonde(at) * f(at);
        },
        cfg);
  }
  return total / vandermonde(theta) + curvatureConstant(static_cast<int>(n)) * f(theta);
}

PairDerivatives pairDerivatives(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                                const StencilConfig& cfg) {
  requirePair(pf, i, j, cfg, "pairDerivatives");
  const HorizontalDirections dir = horizontalDirections(pf.angles.n(), i, j);
  const Matrix v = pf.reconstruct();
  PairDerivatives out;
  out.i = i;
  out.j = j;
  out.n = pf.angles.n();
  out.dk = conjugationDerivative2(psi, v, pf.u, dir.xk, cfg);
  out.dl = conjugationDerivative2(psi, v, pf.u, dir.xl, cfg);
  out.sinSquared = halfAngleSinSquared(pf, i, j);
  return out;
}

Complex angularTerm(const PairDerivatives& d) { return (d.dk + d.dl) / (4.0 * d.sinSquared); }

Complex angularTermHermitian(const PairDerivatives& d) {
  const HorizontalDirections dir = horizontalDirections(d.n, d.i, d.j);
  const Matrix eij = elementaryMatrix(d.n, d.i, d.j);
  const Matrix eji = elementaryMatrix(d.n, d.j, d.i);
  const Matrix iL = eij - eji;
  const Matrix iM = Complex(0.0, 1.0) * (eij + eji);
  // iL = cL X_k and iM = cM X_l; the coefficients are read off with the
  // trace metric rather than assumed.
  const double cL = traceMetric(iL, dir.xk).real();
  const double cM = traceMetric(iM, dir.xl).real();
  if (maxNorm(iL - cL * dir.xk) > 1e-14 || maxNorm(iM - cM * dir.xl) > 1e-14) {
    throw std::logic_error("angularTermHermitian: L, M not parallel to X_k, X_l");
  }
  // L^2 psi = -D_{iL}^2 psi = -cL^2 D_{X_k}^2 psi, likewise for M.
  const Complex lSquared = -cL * cL * d.dk;
  const Complex mSquared = -cM * cM * d.dl;
  return -(lSquared + mSquared) / (8.0 * d.sinSquared);
}

Complex angularTerm(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                    const StencilConfig& cfg) {
  return angularTerm(pairDerivatives(psi, pf, i, j, cfg));
}

Complex angularTermHermitian(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                             const StencilConfig& cfg) {
  return angularTermHermitian(pairDerivatives(psi, pf, i, j, cfg));
}

double polarMargin(const StencilConfig& cfg) { return std::max(kSampleGap, 10.0 * cfg.h); }

PolarLaplacian polarLaplacian(const GroupFunction& psi, const Matrix& v,
                              const StencilConfig& cfg) {
  cfg.validate();
  PolarLaplacian out;
  out.polar = polarDecompose(v);
  if (!(out.polar.minGap > polarMargin(cfg))) {
    throw DegenerateError("polarLaplacian: eigenangle gap " + std::to_string(out.polar.minGap) +
                          " below margin " + std::to_string(polarMargin(cfg)));
  }
  const RadialFunction f = torusRestriction(psi, out.polar.u);
  const RealVector& theta = out.polar.angles.theta();
  out.radial = radialLaplacian(f, theta, cfg);
  out.radialAlt = radialLaplacianAlt(f, theta, cfg);

  Complex angularSum = 0.0;
  const int n = out.polar.angles.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.angular.push_back(angularTerm(psi, out.polar, i, j, cfg));
      angularSum += out.angular.back();
    }
  }
  out.total = out.radial + angularSum;
  out.totalAlt = out.radialAlt + angularSum;
  return out;
}

Complex fullLaplacian(const GroupFunction& psi, const Matrix& v, const StencilConfig& cfg) {
  return polarLaplacian(psi, v, cfg).total;
}

SuLaplacianResult suLaplacianCheck(const GroupFunction& psi, const Matrix& v,
                                   const StencilConfig& cfg) {
  requireSquare(v, "suLaplacianCheck");
  const Complex det = v.determinant();
  if (!(std::abs(det - 1.0) < 1e-10)) {
    throw InputError("suLaplacianCheck: det v != 1");
  }
  const int n = static_cast<int>(v.rows());
  SuLaplacianResult out;
  out.value = psi(v);
  out.casimir = casimirLaplacian(psi, v, buildBasis(n, AlgebraKind::SpecialUnitary), cfg);
  const PolarLaplacian polar = polarLaplacian(centerProjected(psi, n), v, cfg);
  out.polar = polar.total;
  out.polarAlt = polar.totalAlt;
  const double scale = scaleOf(out.value);
  out.maxRelDiff = std::max({std::abs(out.casimir - out.polar), std::abs(out.casimir - out.polarAlt),
                             std::abs(out.polar - out.polarAlt)}) /
                   scale;
  return out;
}

Matrix randomRegularUnitary(int n, double minGap, Rng& rng, bool special) {
  for (;;) {
    Matrix v = special ? randomSpecialUnitary(n, rng) : randomUnitary(n, rng);
    if (polarDecompose(v).minGap > minGap) return v;
  }
}

VerificationReport verifyMainTheorem(const Representation& rep, int samples, std::uint64_t seed,
                                     const StencilConfig& cfg) {
  VerificationReport report;
  report.check = "main-theorem-U" + std::to_string(rep.n()) + "-" + rep.label();
  report.tolerance = kMainTheoremTol;
  report.seed = seed;
  const GeneratorBasis basis = buildBasis(rep.n(), AlgebraKind::FullUnitary);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix v = randomRegularUnitary(rep.n(), kSampleGap, rng);
    for (int row = 0; row < rep.dim(); ++row) {
      for (int col = 0; col < rep.dim(); ++col) {
        const GroupFunction psi = matrixElement(rep, row, col);
        const Complex polar = fullLaplacian(psi, v, cfg);
        const Complex casimir = casimirLaplacian(psi, v, basis, cfg);
        ++report.samples;
        report.record(std::abs(polar - casimir), scaleOf(psi(v)), true,
                      "point " + std::to_string(s) + " " + psi.label);
      }
    }
  }
  return report;
}

CharacterEigenvalue measureCharacterEigenvalue(const Partition& lambda, int samples,
                                               std::uint64_t seed, const StencilConfig& cfg) {
  const RadialFunction chi = characterRadial(lambda);
  Rng rng(seed);
  CharacterEigenvalue out;
  while (static_cast<int>(out.values.size()) < samples) {
    const RealVector theta = randomRegularAngles(lambda.n(), polarMargin(cfg), rng);
    const Complex value = chi(theta);
    if (std::abs(value) < kCharacterFloor) continue;
    const Complex ratio = radialLaplacian(chi, theta, cfg) / value;
    out.values.push_back(ratio.real());
    out.maxImag = std::max(out.maxImag, std::abs(ratio.imag()));
  }
  const double count = static_cast<double>(out.values.size());
  out.mean = std::accumulate(out.values.begin(), out.values.end(), 0.0) / count;
  double var = 0.0;
  for (double x : out.values) var += (x - out.mean) * (x - out.mean);
  out.stddev = std::sqrt(var / count);
  return out;
}

VerificationReport verifyCharacterEigenfunction(const Partition& lambda, int samples,
                                                std::uint64_t seed, const StencilConfig& cfg) {
  VerificationReport report;
  report.check = "character-eigenvalue-(" + lambda.toString() + ")";
  report.tolerance = kEigenOracleTol;
  report.seed = seed;

  const CharacterEigenvalue eig = measureCharacterEigenvalue(lambda, samples, seed, cfg);
  report.samples = static_cast<int>(eig.values.size());
  const double spread = std::abs(eig.mean) > 1e-12 ? eig.stddev / std::abs(eig.mean) : eig.stddev;
  if (!(spread < kEigenSpreadTol)) {
    report.fail("eigenvalue spread " + std::to_string(spread) + " >= 1e-4");
  }
  if (!(eig.maxImag < 1e-6)) report.fail("eigenvalue has an imaginary part");

  if (const auto rep = representationFor(lambda)) {
    const CasimirScalar oracle =
        casimirScalar(casimirMatrix(*rep, buildBasis(lambda.n(), AlgebraKind::FullUnitary)));
    if (!(oracle.relativeResidual < 1e-10)) {
      report.fail("casimir oracle is not scalar; representation not irreducible");
    }
    report.record(std::abs(eig.mean - oracle.value), std::max(std::abs(oracle.value), 1.0), true,
                  "oracle " + std::to_string(oracle.value));
  }
  return report;
}

VerificationReport verifyRadialForms(int n, int functions, std::uint64_t seed,
                                     const StencilConfig& cfg) {
  VerificationReport report;
  report.check = "radial-forms-N" + std::to_string(n);
  report.tolerance = kRadialFormsTol;
  report.seed = seed;
  Rng rng(seed);
  std::uniform_int_distribution<int> wave(-2, 2);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int fi = 0; fi < functions; ++fi) {
    std::vector<RealVector> ks;
    std::vector<Complex> cs;
    for (int m = 0; m < 3; ++m) {
      RealVector k(n);
      for (int j = 0; j < n; ++j) k(j) = wave(rng);
      ks.push_back(k);
      cs.emplace_back(coeff(rng), coeff(rng));
    }
    const RadialFunction f{"trig" + std::to_string(fi),
                           [ks, cs](const RealVector& th) {
                             Complex total = 0.0;
                             for (std::size_t m = 0; m < ks.size(); ++m)
                               total += cs[m] * std::polar(1.0, ks[m].dot(th));
                             return total;
                           },
                           false};
    for (int p = 0; p < 3; ++p) {
      const RealVector theta = randomRegularAngles(n, polarMargin(cfg), rng);
      const Complex a = radialLaplacian(f, theta, cfg);
      const Complex b = radialLaplacianAlt(f, theta, cfg);
      ++report.samples;
      report.record(std::abs(a - b), std::max({std::abs(a), std::abs(f(theta)), kScaleFloor}),
                    true, f.label + " point " + std::to_string(p));
    }
  }
  return report;
}

VerificationReport verifyHermitianBookkeeping(int n, int samples, std::uint64_t seed,
                                              const StencilConfig& cfg) {
  VerificationReport report;
  report.check = "hermitian-bookkeeping-N" + std::to_string(n);
  report.tolerance = kBookkeepingTol;
  report.seed = seed;
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Representation rep = definingRep(n);
  for (int s = 0; s < samples; ++s) {
    Matrix c(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) c(a, b) = Complex(gauss(rng), gauss(rng));
    const GroupFunction psi = matrixCoefficient(rep, c);
    const PolarForm pf = polarDecompose(randomRegularUnitary(n, kSampleGap, rng));
    Complex skew = 0.0;
    Complex hermitian = 0.0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const PairDerivatives d = pairDerivatives(psi, pf, i, j, cfg);
        skew += angularTerm(d);
        hermitian += angularTermHermitian(d);
      }
    }
    ++report.samples;
    report.record(std::abs(skew - hermitian),
                  std::max({std::abs(skew), std::abs(psi(pf.reconstruct())), kScaleFloor}), true,
                  "sample " + std::to_string(s));
  }
  return report;
}

VerificationReport verifySuRoute(int n, int samples, std::uint64_t seed,
                                 const StencilConfig& cfg) {
  VerificationReport report;
  report.check = "su-route-SU" + std::to_string(n);
  report.tolerance = kSuEigenTol;
  report.seed = seed;
  const Representation rep = definingRep(n);
  const double oracle =
      casimirScalar(casimirMatrix(rep, buildBasis(n, AlgebraKind::SpecialUnitary))).value;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix v = randomRegularUnitary(n, kSampleGap, rng, true);
    std::vector<Complex> values, casimir, polar, alt;
    double worstDiff = 0.0;
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        const SuLaplacianResult r = suLaplacianCheck(matrixElement(rep, row, col), v, cfg);
        values.push_back(r.value);
        casimir.push_back(r.casimir);
        polar.push_back(r.polar);
        alt.push_back(r.polarAlt);
        worstDiff = std::max(worstDiff, r.maxRelDiff);
      }
    }
    const std::string tag = "point " + std::to_string(s);
    ++report.samples;
    report.record(std::abs(rayleigh(values, casimir) - oracle), 1.0, false, tag + " casimir");
    report.record(std::abs(rayleigh(values, polar) - oracle), 1.0, false, tag + " polar");
    report.record(std::abs(rayleigh(values, alt) - oracle), 1.0, false, tag + " polar-alt");
    if (!(worstDiff < kMainTheoremTol)) {
      report.fail(tag + ": routes disagree elementwise (rel " + std::to_string(worstDiff) + ")");
    }
  }
  return report;
}

}  // namespace weyl
