#include "weyl/matrix.hpp"

#include <cmath>

namespace weyl {

double maxNorm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool allFinite(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void requireSquare(const Matrix& a, const std::string& what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw InputError(what + ": expected a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!allFinite(a)) throw InputError(what + ": matrix has non-finite entries");
}

void requireSameDim(const Matrix& a, const Matrix& b, const std::string& what) {
  requireSquare(a, what);
  requireSquare(b, what);
  if (a.rows() != b.rows()) {
    throw InputError(what + ": dimension mismatch (" + std::to_string(a.rows()) +
                     " vs " + std::to_string(b.rows()) + ")");
  }
}

double skewHermitianResidual(const Matrix& a) { return maxNorm(a + a.adjoint()); }

double hermitianResidual(const Matrix& a) { return maxNorm(a - a.adjoint()); }

double unitarityResidual(const Matrix& a) {
  return maxNorm(a.adjoint() * a - Matrix::Identity(a.rows(), a.cols()));
}

double offDiagonalResidual(const Matrix& a) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

OneParameterSubgroup::OneParameterSubgroup(const Matrix& z) {
  const Matrix h = Complex(0.0, -1.0) * z;
  // Symmetrize so the solver sees an exactly hermitian input.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  vectors_ = solver.eigenvectors();
  frequencies_ = solver.eigenvalues();
}

Matrix OneParameterSubgroup::operator()(double t) const {
  Eigen::VectorXcd phases(frequencies_.size());
  for (Eigen::Index k = 0; k < frequencies_.size(); ++k)
    phases(k) = std::polar(1.0, t * frequencies_(k));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Matrix expSkewHermitian(const Matrix& z, double t) { return OneParameterSubgroup(z)(t); }

Matrix torusElement(const RealVector& theta) {
  const Eigen::Index n = theta.size();
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a(j, j) = std::polar(1.0, theta(j));
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace weyl
