#include "weyl/representations.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "weyl/polar.hpp"
#include "weyl/sampling.hpp"

namespace weyl {

namespace {

constexpr double kCharacterMinGap = 1e-4;

// Isometry from the (anti)symmetric subspace of C^d (x) C^d into C^{d^2}.
Matrix swapEigenbasis(int d, bool symmetric) {
  const int cols = symmetric ? d * (d + 1) / 2 : d * (d - 1) / 2;
  Matrix p = Matrix::Zero(d * d, cols);
  const double r = 1.0 / std::sqrt(2.0);
  int c = 0;
  for (int a = 0; a < d; ++a) {
    if (symmetric) p(a * d + a, c++) = 1.0;
    for (int b = a + 1; b < d; ++b) {
      p(a * d + b, c) = r;
      p(b * d + a, c) = symmetric ? r : -r;
      ++c;
    }
  }
  return p;
}

Representation restrictedSquare(const Representation& a, bool symmetric) {
  const Representation full = tensorRep(a, a);
  const Matrix p = swapEigenbasis(a.dim(), symmetric);
  const std::string label = std::string(symmetric ? "sym2(" : "alt2(") + a.label() + ")";
  return Representation(
      label, a.n(), static_cast<int>(p.cols()),
      [full, p](const Matrix& v) -> Matrix { return p.adjoint() * full.group(v) * p; },
      [full, p](const Matrix& z) -> Matrix { return p.adjoint() * full.algebra(z) * p; });
}

}  // namespace

Representation::Representation(std::string label, int n, int dim, Map group, Map algebra)
    : label_(std::move(label)), n_(n), dim_(dim), group_(std::move(group)),
      algebra_(std::move(algebra)) {}

Complex Representation::character(const RealVector& theta) const {
  return group(torusElement(theta)).trace();
}

Representation trivialRep(int n) {
  return Representation(
      "trivial", n, 1, [](const Matrix&) -> Matrix { return Matrix::Identity(1, 1); },
      [](const Matrix&) -> Matrix { return Matrix::Zero(1, 1); });
}

Representation definingRep(int n) {
  if (n < 2) throw std::invalid_argument("definingRep: n must be >= 2");
  return Representation(
      "defining", n, n, [](const Matrix& v) -> Matrix { return v; },
      [](const Matrix& z) -> Matrix { return z; });
}

Representation tensorRep(const Representation& a, const Representation& b) {
  if (a.n() != b.n()) throw InputError("tensorRep: factors act on different groups");
  const Matrix ia = Matrix::Identity(a.dim(), a.dim());
  const Matrix ib = Matrix::Identity(b.dim(), b.dim());
  return Representation(
      a.label() + "*" + b.label(), a.n(), a.dim() * b.dim(),
      [a, b](const Matrix& v) -> Matrix { return kron(a.group(v), b.group(v)); },
      [a, b, ia, ib](const Matrix& z) -> Matrix {
        return kron(a.algebra(z), ib) + kron(ia, b.algebra(z));
      });
}

Representation symmetricSquare(const Representation& a) { return restrictedSquare(a, true); }

Representation antisymmetricSquare(const Representation& a) { return restrictedSquare(a, false); }

Matrix casimirMatrix(const Representation& rep, const GeneratorBasis& basis) {
  if (rep.n() != basis.n()) {
    throw InputError("casimirMatrix: basis is for N=" + std::to_string(basis.n()) +
                     ", representation for N=" + std::to_string(rep.n()));
  }
  Matrix c = Matrix::Zero(rep.dim(), rep.dim());
  for (const Generator& g : basis.generators()) {
    const Matrix x = rep.algebra(g.matrix);
    c += x * x;
  }
  return c;
}

CasimirScalar casimirScalar(const Matrix& casimir) {
  requireSquare(casimir, "casimirScalar");
  CasimirScalar out;
  out.value = casimir.trace().real() / static_cast<double>(casimir.rows());
  const double dev =
      maxNorm(casimir - out.value * Matrix::Identity(casimir.rows(), casimir.cols()));
  out.relativeResidual = out.value != 0.0 ? dev / std::abs(out.value) : dev;
  return out;
}

VerificationReport verifyRepresentation(const Representation& rep, int samples,
                                        std::uint64_t seed) {
  VerificationReport report;
  report.check = "representation-" + rep.label();
  report.seed = seed;
  report.tolerance = 1e-8;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix v = randomUnitary(rep.n(), rng);
    const Matrix w = randomUnitary(rep.n(), rng);
    const Matrix z = randomSkewHermitian(rep.n(), rng);
    const std::string tag = " sample " + std::to_string(s);

    const double hom = maxNorm(rep.group(v * w) - rep.group(v) * rep.group(w));
    ++report.samples;
    report.record(hom, 1.0, false, "homomorphism" + tag);
    if (hom >= 1e-10) report.fail("homomorphism above 1e-10" + tag);

    const double t = 0.1;
    const double compat =
        maxNorm(rep.group(expSkewHermitian(z, t)) - expSkewHermitian(rep.algebra(z), t));
    report.record(compat, 1.0, false, "exp compatibility" + tag);

    const double skew = skewHermitianResidual(rep.algebra(z));
    report.record(skew, 1.0, false, "skew" + tag);
    if (skew >= 1e-12) report.fail("d rho(Z) not skew-hermitian" + tag);
  }
  return report;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("partition: empty");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw InputError("partition: negative part");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw InputError("partition: parts must not increase");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("partition: cannot parse '" + text + "'");
    }
    if (used != item.size()) throw InputError("partition: cannot parse '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::boxes() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::string Partition::toString() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out;
}

Complex schurCharacter(const Partition& lambda, const RealVector& theta) {
  const int n = lambda.n();
  if (theta.size() != n) throw InputError("schurCharacter: partition and angles differ in length");
  if (!(minAngularGap(theta) >= kCharacterMinGap)) {
    throw DegenerateError("schurCharacter: angles closer than 1e-4");
  }
  Matrix num(n, n);
  Matrix den(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int shift = n - 1 - j;
      num(i, j) = std::polar(1.0, (lambda.parts()[j] + shift) * theta(i));
      den(i, j) = std::polar(1.0, shift * theta(i));
    }
  }
  return num.partialPivLu().determinant() / den.partialPivLu().determinant();
}

std::optional<Representation> representationFor(const Partition& lambda) {
  const auto& p = lambda.parts();
  const int n = lambda.n();
  if (n < 2) return std::nullopt;
  const int boxes = lambda.boxes();
  if (boxes == 0) return trivialRep(n);
  if (boxes == 1) return definingRep(n);
  if (boxes == 2 && p[0] == 2) return symmetricSquare(definingRep(n));
  if (boxes == 2 && p[0] == 1) return antisymmetricSquare(definingRep(n));
  return std::nullopt;
}

}  // namespace weyl
