#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace weyl {

using Complex = std::complex<double>;

/// Dense N x N complex matrix. Group elements (v, u, a) and algebra
/// elements (Z, X, Y) share this representation.
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Malformed input: wrong shape, non-finite entries, non-unitary group
/// element, algebra element outside the expected subspace.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point too close to the singular set where eigenangles
/// coincide.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest absolute entry.
double maxNorm(const Matrix& a);

bool allFinite(const Matrix& a);

/// Throws InputError unless `a` is square, non-empty and finite.
void requireSquare(const Matrix& a, const std::string& what);

/// Throws InputError unless both are square with the same dimension.
void requireSameDim(const Matrix& a, const Matrix& b, const std::string& what);

/// max |A + A^dagger|.
double skewHermitianResidual(const Matrix& a);

/// max |A - A^dagger|.
double hermitianResidual(const Matrix& a);

/// max |A^dagger A - I|.
double unitarityResidual(const Matrix& a);

/// Largest off-diagonal magnitude.
double offDiagonalResidual(const Matrix& a);

/// exp(t Z) for skew-hermitian Z, through the eigendecomposition of the
/// hermitian matrix -iZ. The result is unitary to rounding.
Matrix expSkewHermitian(const Matrix& z, double t = 1.0);

/// t -> exp(t Z) for a fixed skew-hermitian Z, with the eigendecomposition
/// computed once.
class OneParameterSubgroup {
 public:
  explicit OneParameterSubgroup(const Matrix& z);
  Matrix operator()(double t) const;

 private:
  Matrix vectors_;
  RealVector frequencies_;
};

/// diag(e^{i theta_1}, ..., e^{i theta_N}).
Matrix torusElement(const RealVector& theta);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace weyl
