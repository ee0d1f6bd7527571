#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weyl/matrix.hpp"

namespace weyl {

enum class AlgebraKind { FullUnitary, SpecialUnitary };

/// "u" or "su".
std::string toString(AlgebraKind kind);

/// Accepts "u", "su", "full-unitary", "special-unitary".
AlgebraKind parseAlgebraKind(const std::string& text);

struct Generator {
  std::string label;
  Matrix matrix;
};

/// One off-diagonal pair (i < j, 1-based) and the positions of its two
/// generators X_k = (E_ij - E_ji)/sqrt2 and X_l = i(E_ij + E_ji)/sqrt2.
struct HorizontalPair {
  int i = 0;
  int j = 0;
  std::size_t indexK = 0;
  std::size_t indexL = 0;
};

/// Orthonormal skew-hermitian basis of u(N) or su(N).
///
/// Ordering: vertical (diagonal) generators first, ascending; then one
/// (X_k, X_l) pair per (i, j) with i < j in lexicographic order.
class GeneratorBasis {
 public:
  GeneratorBasis(int n, AlgebraKind kind, std::vector<Generator> generators,
                 std::vector<HorizontalPair> pairs);

  int n() const { return n_; }
  AlgebraKind kind() const { return kind_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t verticalCount() const { return generators_.size() - 2 * pairs_.size(); }

  const Generator& operator[](std::size_t index) const { return generators_.at(index); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<HorizontalPair>& pairs() const { return pairs_; }

  /// Pair containing the generator at `index`; empty for vertical ones.
  std::optional<HorizontalPair> pairOf(std::size_t index) const;

  /// The other member of the pair containing `index`.
  std::optional<std::size_t> partnerOf(std::size_t index) const;

  std::vector<Matrix> matrices() const;

 private:
  int n_;
  AlgebraKind kind_;
  std::vector<Generator> generators_;
  std::vector<HorizontalPair> pairs_;
};

/// E_ij: single unit entry at row i, column j (1-based, as in the
/// mathematical labels). Throws std::out_of_range.
Matrix elementaryMatrix(int n, int i, int j);

/// W_ij = -i E_ij.
Matrix wOperator(int n, int i, int j);

/// g(V, W) = -Tr(VW). Real whenever V and W are skew-hermitian.
Complex traceMetric(const Matrix& v, const Matrix& w);

Matrix commutator(const Matrix& v, const Matrix& w);

/// Throws std::invalid_argument for n < 2 (su(1) is trivial and u(1) has
/// no off-diagonal structure).
GeneratorBasis buildBasis(int n, AlgebraKind kind);

/// Gram matrix G_ab = g(B_a, B_b) over a set of generators.
Matrix gramMatrix(std::span<const Matrix> generators);
Matrix gramMatrix(const GeneratorBasis& basis);

/// max |G - I|.
double orthonormalityResidual(std::span<const Matrix> generators);

/// Structure constants f_ijk = g([B_i, B_j], B_k) of an orthonormal set of
/// generators that closes under the bracket.
class StructureTable {
 public:
  StructureTable(std::size_t dim, std::vector<double> values, double expansionResidual);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return f_[(i * dim_ + j) * dim_ + k];
  }

  /// max_ij || [B_i, B_j] - sum_k f_ijk B_k ||_max, measured at construction.
  double expansionResidual() const { return expansionResidual_; }

  /// max |f_ijk + f_jik|.
  double antisymmetryResidual() const;

  /// max over (i,j,k,l) of |sum_m f_ijm f_mkl + f_jkm f_mil + f_kim f_mjl|.
  double jacobiResidual() const;

 private:
  std::size_t dim_;
  std::vector<double> f_;
  double expansionResidual_;
};

/// Throws InputError if the set is not orthonormal (residual > 1e-10) or
/// does not close under the bracket (expansion residual > 1e-12).
StructureTable structureConstants(std::span<const Matrix> generators);
StructureTable structureConstants(const GeneratorBasis& basis);

}  // namespace weyl
