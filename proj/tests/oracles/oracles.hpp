#pragma once

// Reference values computed without the library's own machinery: matrices
// typed in by hand, closed-form products, and bases built by Gram-Schmidt
// from random input rather than from matrix units.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M mat3(std::initializer_list<C> entries) {
  M a(3, 3);
  auto it = entries.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = *it++;
  return a;
}

/// Gell-Mann matrices, 1-based, as printed in every textbook.
inline M gellMann(int k) {
  const C i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(3.0);
  switch (k) {
    case 1: return mat3({0, 1, 0, 1, 0, 0, 0, 0, 0});
    case 2: return mat3({0, -i, 0, i, 0, 0, 0, 0, 0});
    case 3: return mat3({1, 0, 0, 0, -1, 0, 0, 0, 0});
    case 4: return mat3({0, 0, 1, 0, 0, 0, 1, 0, 0});
    case 5: return mat3({0, 0, -i, 0, 0, 0, i, 0, 0});
    case 6: return mat3({0, 0, 0, 0, 0, 1, 0, 1, 0});
    case 7: return mat3({0, 0, 0, 0, 0, -i, 0, i, 0});
    default: return mat3({s, 0, 0, 0, s, 0, 0, 0, -2 * s});
  }
}

inline double metric(const M& a, const M& b) { return -(a * b).trace().real(); }

/// Orthonormal basis of u(N) (or su(N)) under -Tr(VW), from Gram-Schmidt on
/// random skew-hermitian matrices.
inline std::vector<M> randomOrthonormalBasis(int n, bool special, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const int dim = special ? n * n - 1 : n * n;
  std::vector<M> out;
  while (static_cast<int>(out.size()) < dim) {
    M h(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) h(r, c) = C(g(rng), g(rng));
    M z = 0.5 * (h - h.adjoint());
    if (special) z -= (z.trace() / double(n)) * M::Identity(n, n);
    for (const M& b : out) z -= metric(z, b) * b;
    const double norm = std::sqrt(metric(z, z));
    if (norm > 1e-6) out.push_back(z / norm);
  }
  return out;
}

/// sum_k B_k^2 for the defining representation is -c I with c = N for u(N)
/// and (N^2 - 1)/N for su(N).
inline double definingCasimir(int n, bool special) {
  return special ? -(n * n - 1.0) / n : -double(n);
}

/// Casimir eigenvalue on the symmetric (or antisymmetric) square, by applying
/// sum_k (B (x) 1 + 1 (x) B)^2 to e1 (x) e1 (or e1 (x) e2 - e2 (x) e1).
inline double squareCasimir(int n, bool symmetric, std::mt19937_64& rng) {
  const auto basis = randomOrthonormalBasis(n, false, rng);
  const M id = M::Identity(n, n);
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n * n);
  if (symmetric) {
    x(0) = 1.0;
  } else {
    x(1) = 1.0;
    x(n) = -1.0;
  }
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n * n);
  for (const M& b : basis) {
    M d = M::Zero(n * n, n * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        d.block(r * n, c * n, n, n) += b(r, c) * id;
        if (r == c) d.block(r * n, c * n, n, n) += b;
      }
    y += d * (d * x);
  }
  return (x.dot(y) / x.squaredNorm()).real();
}

/// The N = 3 Vandermonde in its second printed form.
inline double vandermonde3(double a, double b, double c) {
  return -8.0 * std::sin(0.5 * (a - b)) * std::sin(0.5 * (b - c)) * std::sin(0.5 * (c - a));
}

/// Hook-length dimension of the U(N) irrep with highest weight `lambda`.
inline long hookDimension(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  double dim = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dim *= double(lambda[i] - lambda[j] + j - i) / double(j - i);
  return std::lround(dim);
}

/// Characters of the shapes (1), (1,1), (2) from power sums p_k = sum x^k.
inline C powerSum(const Eigen::VectorXd& theta, int k) {
  C p = 0.0;
  for (int j = 0; j < theta.size(); ++j) p += std::polar(1.0, k * theta(j));
  return p;
}
inline C definingCharacter(const Eigen::VectorXd& t) { return powerSum(t, 1); }
inline C antisymmetricCharacter(const Eigen::VectorXd& t) {
  return 0.5 * (powerSum(t, 1) * powerSum(t, 1) - powerSum(t, 2));
}
inline C symmetricCharacter(const Eigen::VectorXd& t) {
  return 0.5 * (powerSum(t, 1) * powerSum(t, 1) + powerSum(t, 2));
}

/// Coefficients of `a` in an orthonormal basis by least squares on the
/// flattened matrices, independent of the trace pairing.
inline Eigen::VectorXd expandInBasis(const M& a, const std::vector<M>& basis) {
  const Eigen::Index n2 = a.size();
  Eigen::MatrixXd design(2 * n2, static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXd rhs(2 * n2);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (Eigen::Index e = 0; e < n2; ++e) {
      design(e, static_cast<Eigen::Index>(k)) = basis[k].data()[e].real();
      design(n2 + e, static_cast<Eigen::Index>(k)) = basis[k].data()[e].imag();
    }
  for (Eigen::Index e = 0; e < n2; ++e) {
    rhs(e) = a.data()[e].real();
    rhs(n2 + e) = a.data()[e].imag();
  }
  return design.colPivHouseholderQr().solve(rhs);
}

}  // namespace oracle
