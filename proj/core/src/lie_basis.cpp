#include "weyl/lie_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace weyl {

namespace {

constexpr double kOrthonormalTol = 1e-10;
constexpr double kClosureTol = 1e-12;

std::string pairLabel(const char* prefix, int i, int j) {
  return std::string(prefix) + "_" + std::to_string(i) + std::to_string(j);
}

// Gram-Schmidt of {i(T_j - T_{j+1})} under the trace metric: an
// orthonormal traceless diagonal sector.
std::vector<Matrix> tracelessDiagonalBasis(int n) {
  std::vector<Matrix> out;
  const Complex iu(0.0, 1.0);
  for (int j = 1; j < n; ++j) {
    Matrix w = iu * (elementaryMatrix(n, j, j) - elementaryMatrix(n, j + 1, j + 1));
    for (const Matrix& q : out) w -= traceMetric(w, q).real() * q;
    w /= std::sqrt(traceMetric(w, w).real());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::string toString(AlgebraKind kind) {
  return kind == AlgebraKind::FullUnitary ? "u" : "su";
}

AlgebraKind parseAlgebraKind(const std::string& text) {
  if (text == "u" || text == "full-unitary") return AlgebraKind::FullUnitary;
  if (text == "su" || text == "special-unitary") return AlgebraKind::SpecialUnitary;
  throw std::invalid_argument("unknown algebra kind '" + text + "' (expected u or su)");
}

GeneratorBasis::GeneratorBasis(int n, AlgebraKind kind, std::vector<Generator> generators,
                               std::vector<HorizontalPair> pairs)
    : n_(n), kind_(kind), generators_(std::move(generators)), pairs_(std::move(pairs)) {
  for (const Generator& g : generators_) {
    if (g.matrix.rows() != n_ || g.matrix.cols() != n_) {
      throw InputError("generator '" + g.label + "' has the wrong dimension");
    }
  }
  for (const HorizontalPair& p : pairs_) {
    if (p.indexK >= generators_.size() || p.indexL >= generators_.size()) {
      throw InputError("pair index out of range");
    }
  }
}

std::optional<HorizontalPair> GeneratorBasis::pairOf(std::size_t index) const {
  for (const HorizontalPair& p : pairs_)
    if (p.indexK == index || p.indexL == index) return p;
  return std::nullopt;
}

std::optional<std::size_t> GeneratorBasis::partnerOf(std::size_t index) const {
  const auto p = pairOf(index);
  if (!p) return std::nullopt;
  return p->indexK == index ? p->indexL : p->indexK;
}

std::vector<Matrix> GeneratorBasis::matrices() const {
  std::vector<Matrix> out;
  out.reserve(generators_.size());
  for (const Generator& g : generators_) out.push_back(g.matrix);
  return out;
}

Matrix elementaryMatrix(int n, int i, int j) {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("elementaryMatrix: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for n=" + std::to_string(n));
  }
  Matrix e = Matrix::Zero(n, n);
  e(i - 1, j - 1) = 1.0;
  return e;
}

Matrix wOperator(int n, int i, int j) { return Complex(0.0, -1.0) * elementaryMatrix(n, i, j); }

Complex traceMetric(const Matrix& v, const Matrix& w) {
  requireSameDim(v, w, "traceMetric");
  // -Tr(VW) without forming the product.
  return -(v.transpose().cwiseProduct(w)).sum();
}

Matrix commutator(const Matrix& v, const Matrix& w) {
  requireSameDim(v, w, "commutator");
  return v * w - w * v;
}

GeneratorBasis buildBasis(int n, AlgebraKind kind) {
  if (n < 2) throw std::invalid_argument("buildBasis: n must be >= 2, got " + std::to_string(n));

  const Complex iu(0.0, 1.0);
  const double invSqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Generator> gens;
  std::vector<HorizontalPair> pairs;

  if (kind == AlgebraKind::FullUnitary) {
    for (int j = 1; j <= n; ++j)
      gens.push_back({"iT" + std::to_string(j), iu * elementaryMatrix(n, j, j)});
  } else {
    auto diag = tracelessDiagonalBasis(n);
    for (std::size_t j = 0; j < diag.size(); ++j)
      gens.push_back({"iD" + std::to_string(j + 1), std::move(diag[j])});
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Matrix eij = elementaryMatrix(n, i, j);
      const Matrix eji = elementaryMatrix(n, j, i);
      HorizontalPair p{i, j, gens.size(), gens.size() + 1};
      gens.push_back({pairLabel("Xk", i, j), invSqrt2 * (eij - eji)});
      gens.push_back({pairLabel("Xl", i, j), (iu * invSqrt2) * (eij + eji)});
      pairs.push_back(p);
    }
  }
  return GeneratorBasis(n, kind, std::move(gens), std::move(pairs));
}

Matrix gramMatrix(std::span<const Matrix> generators) {
  const auto d = static_cast<Eigen::Index>(generators.size());
  Matrix g(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) g(a, b) = traceMetric(generators[a], generators[b]);
  return g;
}

Matrix gramMatrix(const GeneratorBasis& basis) {
  const auto m = basis.matrices();
  return gramMatrix(std::span<const Matrix>(m));
}

double orthonormalityResidual(std::span<const Matrix> generators) {
  const Matrix g = gramMatrix(generators);
  return maxNorm(g - Matrix::Identity(g.rows(), g.cols()));
}

StructureTable::StructureTable(std::size_t dim, std::vector<double> values,
                               double expansionResidual)
    : dim_(dim), f_(std::move(values)), expansionResidual_(expansionResidual) {
  if (f_.size() != dim_ * dim_ * dim_) throw InputError("StructureTable: size mismatch");
}

double StructureTable::antisymmetryResidual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        worst = std::max(worst, std::abs((*this)(i, j, k) + (*this)(j, i, k)));
  return worst;
}

double StructureTable::jacobiResidual() const {
  const auto& f = *this;
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) {
          double s = 0.0;
          for (std::size_t m = 0; m < dim_; ++m)
            s += f(i, j, m) * f(m, k, l) + f(j, k, m) * f(m, i, l) + f(k, i, m) * f(m, j, l);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

StructureTable structureConstants(std::span<const Matrix> generators) {
  if (generators.empty()) throw InputError("structureConstants: empty generator set");
  const double ortho = orthonormalityResidual(generators);
  if (!(ortho <= kOrthonormalTol)) {
    throw InputError("structureConstants: generators are not orthonormal (residual " +
                     std::to_string(ortho) + ")");
  }
  const std::size_t d = generators.size();
  std::vector<double> f(d * d * d, 0.0);
  double residual = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix c = commutator(generators[i], generators[j]);
      Matrix expansion = Matrix::Zero(c.rows(), c.cols());
      for (std::size_t k = 0; k < d; ++k) {
        const double fijk = traceMetric(c, generators[k]).real();
        f[(i * d + j) * d + k] = fijk;
        expansion += fijk * generators[k];
      }
      residual = std::max(residual, maxNorm(c - expansion));
    }
  }
  if (residual > kClosureTol) {
    throw InputError("structureConstants: generators do not close under the bracket (residual " +
                     std::to_string(residual) + ")");
  }
  return StructureTable(d, std::move(f), residual);
}

StructureTable structureConstants(const GeneratorBasis& basis) {
  const auto m = basis.matrices();
  return structureConstants(std::span<const Matrix>(m));
}

}  // namespace weyl
