#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weyl/lie_basis.hpp"
#include "weyl/report.hpp"

namespace weyl {

/// A finite-dimensional representation of U(N): the group map rho and its
/// differential d rho on u(N).
class Representation {
 public:
  using Map = std::function<Matrix(const Matrix&)>;

  Representation(std::string label, int n, int dim, Map group, Map algebra);

  const std::string& label() const { return label_; }
  int n() const { return n_; }
  int dim() const { return dim_; }

  Matrix group(const Matrix& v) const { return group_(v); }
  Matrix algebra(const Matrix& z) const { return algebra_(z); }

  /// Tr rho(diag(e^{i theta})).
  Complex character(const RealVector& theta) const;

 private:
  std::string label_;
  int n_;
  int dim_;
  Map group_;
  Map algebra_;
};

Representation trivialRep(int n);

/// rho(v) = v, d rho(Z) = Z. Throws std::invalid_argument for n < 2.
Representation definingRep(int n);

/// rho_a (x) rho_b, with d rho(Z) = d rho_a(Z) (x) I + I (x) d rho_b(Z).
Representation tensorRep(const Representation& a, const Representation& b);

/// Restrictions of a (x) a to the swap-symmetric and swap-antisymmetric
/// subspaces, dims d(d+1)/2 and d(d-1)/2.
Representation symmetricSquare(const Representation& a);
Representation antisymmetricSquare(const Representation& a);

/// C = sum_k d rho(B_k)^2 over the basis. Throws InputError when the basis
/// and the representation live on different N.
Matrix casimirMatrix(const Representation& rep, const GeneratorBasis& basis);

struct CasimirScalar {
  double value = 0.0;             // Re Tr C / dim
  double relativeResidual = 0.0;  // ||C - value I||_max / |value| (absolute if value == 0)
};

CasimirScalar casimirScalar(const Matrix& casimir);

/// Spot checks of a representation: rho(vw) = rho(v) rho(w) within 1e-10,
/// rho(exp(tZ)) = exp(t d rho(Z)) within 1e-8 at t = 0.1, d rho(Z)
/// skew-hermitian within 1e-12.
VerificationReport verifyRepresentation(const Representation& rep, int samples,
                                        std::uint64_t seed);

/// Weakly decreasing list of N non-negative integers: a U(N) highest weight.
class Partition {
 public:
  /// Throws InputError for negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,0".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return static_cast<int>(parts_.size()); }
  int boxes() const;
  std::string toString() const;

 private:
  std::vector<int> parts_;
};

/// U(N) irreducible character at diag(e^{i theta}) by the bialternant
/// det(x_i^{lambda_j + N - j}) / det(x_i^{N - j}), x = e^{i theta}.
/// Throws DegenerateError when two angles are closer than 1e-4.
Complex schurCharacter(const Partition& lambda, const RealVector& theta);

/// The tensor construction of the irrep with this highest weight, for the
/// shapes built here: (0..0), (1,0..0), (1,1,0..0), (2,0..0).
std::optional<Representation> representationFor(const Partition& lambda);

}  // namespace weyl
