#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weyl/lie_basis.hpp"
#include "weyl/polar.hpp"
#include "weyl/report.hpp"
#include "weyl/representations.hpp"
#include "weyl/sampling.hpp"
#include "weyl/stencil.hpp"

namespace weyl {

/// Scalar function on U(N), evaluated on unitary matrices.
struct GroupFunction {
  std::string label;
  std::function<Complex(const Matrix&)> evaluate;

  Complex operator()(const Matrix& v) const { return evaluate(v); }
};

/// Function of the eigenangles alone.
struct RadialFunction {
  std::string label;
  std::function<Complex(const RealVector&)> evaluate;
  bool symmetric = false;

  Complex operator()(const RealVector& theta) const { return evaluate(theta); }
};

GroupFunction constantFunction(Complex value);

/// v -> rho(v)_{row,col} (0-based).
GroupFunction matrixElement(const Representation& rep, int row, int col);

/// v -> Tr rho(v).
GroupFunction characterFunction(const Representation& rep);

/// v -> sum_{mn} c_mn rho(v)_mn.
GroupFunction matrixCoefficient(const Representation& rep, const Matrix& coefficients);

/// Extension of a function on SU(N) to U(N) that is constant along the
/// centre: w -> psi(w e^{-i arg(det w)/N}). Valid near det w = 1.
GroupFunction centerProjected(const GroupFunction& psi, int n);

/// theta -> psi(u diag(e^{i theta}) u^dagger) with u frozen.
RadialFunction torusRestriction(const GroupFunction& psi, const Matrix& u);

/// theta -> schurCharacter(lambda, theta).
RadialFunction characterRadial(const Partition& lambda);

/// Largest |f(P theta) - f(theta)| over the transpositions P.
double symmetryResidual(const RadialFunction& f, const RealVector& theta);

/// d^2/dt^2 psi(v exp(tZ)) at t = 0. Z skew-hermitian.
Complex leftInvariantDerivative2(const GroupFunction& psi, const Matrix& v, const Matrix& z,
                                 const StencilConfig& cfg = {});

/// sum_k d^2/dt^2 psi(v exp(t B_k)) over an orthonormal basis.
Complex casimirLaplacian(const GroupFunction& psi, const Matrix& v, const GeneratorBasis& basis,
                         const StencilConfig& cfg = {});

/// sum_j [d_j^2 f + (d_j J^2 / J^2) d_j f], with
/// d_j J^2 / J^2 = sum_{k != j} cot((theta_j - theta_k)/2).
/// Throws DegenerateError unless the min gap exceeds 10 h.
Complex radialLaplacian(const RadialFunction& f, const RealVector& theta,
                        const StencilConfig& cfg = {});

/// J^-1 sum_j d_j^2 (J f) + R_N f. Same precondition.
Complex radialLaplacianAlt(const RadialFunction& f, const RealVector& theta,
                           const StencilConfig& cfg = {});

/// Second derivatives along the two horizontal directions of the pair
/// (i, j), 1-based, i < j: dk = D_k^2 psi and dl = D_l^2 psi, where
/// D_X psi(v) = d/dt psi(e^{tX'} v e^{-tX'}), X' = u X u^dagger, and
/// X_k = (E_ij - E_ji)/sqrt2, X_l = i(E_ij + E_ji)/sqrt2.
/// Throws DegenerateError when the pair's gap is not above 10 h.
struct PairDerivatives {
  int n = 0;
  int i = 0;
  int j = 0;
  Complex dk;
  Complex dl;
  double sinSquared = 0.0;  // sin^2((theta_i - theta_j)/2)
};

PairDerivatives pairDerivatives(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                                const StencilConfig& cfg = {});

/// Angular contribution of the pair, (D_k^2 + D_l^2) psi / (4 sin^2).
Complex angularTerm(const PairDerivatives& d);
Complex angularTerm(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                    const StencilConfig& cfg = {});

/// The same contribution in hermitian bookkeeping,
///   -(L_ij^2 + M_ij^2) psi / (8 sin^2((theta_i - theta_j)/2)),
/// iL_ij = E_ij - E_ji, iM_ij = i(E_ij + E_ji), with L^2 psi = -D_{iL}^2 psi.
/// Built from the same derivative data: iL and iM are rescaled X_k and X_l,
/// and the scale factors are measured with the trace metric.
Complex angularTermHermitian(const PairDerivatives& d);
Complex angularTermHermitian(const GroupFunction& psi, const PolarForm& pf, int i, int j,
                             const StencilConfig& cfg = {});

/// Breakdown of the polar-coordinate Laplacian at one point.
struct PolarLaplacian {
  PolarForm polar;
  Complex radial;
  Complex radialAlt;
  std::vector<Complex> angular;  // one per pair, lexicographic (i, j)
  Complex total;                 // radial + sum(angular)
  Complex totalAlt;              // radialAlt + sum(angular)
};

/// Minimum eigenangle separation required by the polar evaluators.
double polarMargin(const StencilConfig& cfg);

/// Polar-form Laplacian: radial part on F(theta) = psi(u diag(e^{i theta})
/// u^dagger) with u frozen, plus all angular terms. Throws DegenerateError
/// unless min gap > max(0.3, 10 h).
PolarLaplacian polarLaplacian(const GroupFunction& psi, const Matrix& v,
                              const StencilConfig& cfg = {});

Complex fullLaplacian(const GroupFunction& psi, const Matrix& v, const StencilConfig& cfg = {});

/// SU(N) evaluation of one function at one point by three routes.
struct SuLaplacianResult {
  Complex value;     // psi(v)
  Complex casimir;   // special-unitary basis
  Complex polar;     // radial + angular on the centre-constant extension
  Complex polarAlt;  // J^-1 d^2 J + R_N route (R_3 = 2)
  double maxRelDiff = 0.0;
};

/// Throws InputError unless |det v - 1| < 1e-10.
SuLaplacianResult suLaplacianCheck(const GroupFunction& psi, const Matrix& v,
                                   const StencilConfig& cfg = {});

/// Haar unitary (or special unitary) conditioned on min gap > minGap.
Matrix randomRegularUnitary(int n, double minGap, Rng& rng, bool special = false);

// Verification sweeps. Each returns one report; tolerances are fixed here.

/// Polar vs Casimir form on every matrix element of `rep` at `samples`
/// random regular points (min gap 0.3). Relative error < 5e-4, scale
/// max(|psi(v)|, 0.1).
VerificationReport verifyMainTheorem(const Representation& rep, int samples, std::uint64_t seed,
                                     const StencilConfig& cfg = {});

/// Eigenvalue measured by radialLaplacian(chi)/chi over `samples` points.
struct CharacterEigenvalue {
  double mean = 0.0;
  double stddev = 0.0;
  double maxImag = 0.0;
  std::vector<double> values;
};

CharacterEigenvalue measureCharacterEigenvalue(const Partition& lambda, int samples,
                                               std::uint64_t seed, const StencilConfig& cfg = {});

/// std/|mean| < 1e-4 and, where a representation is built for the shape,
/// |mean - casimir oracle| < 1e-4 |oracle|.
VerificationReport verifyCharacterEigenfunction(const Partition& lambda, int samples,
                                                std::uint64_t seed, const StencilConfig& cfg = {});

/// radialLaplacian vs radialLaplacianAlt on random trigonometric functions.
/// Relative tolerance 1e-5.
VerificationReport verifyRadialForms(int n, int functions, std::uint64_t seed,
                                     const StencilConfig& cfg = {});

/// angularTerm vs angularTermHermitian on random (psi, v). Relative
/// tolerance 1e-10.
VerificationReport verifyHermitianBookkeeping(int n, int samples, std::uint64_t seed,
                                              const StencilConfig& cfg = {});

/// SU(N) defining matrix elements: Casimir route, polar route and the
/// R_N route agree and give the special-basis Casimir eigenvalue within 1e-3.
VerificationReport verifySuRoute(int n, int samples, std::uint64_t seed,
                                 const StencilConfig& cfg = {});

}  // namespace weyl
