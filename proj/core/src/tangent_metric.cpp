#include "weyl/tangent_metric.hpp"

#include <cmath>

#include "weyl/sampling.hpp"

namespace weyl {

namespace {

constexpr double kShapeTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

void requireSkew(const Matrix& z, const std::string& what) {
  if (skewHermitianResidual(z) > kShapeTol) throw InputError(what + ": not skew-hermitian");
}

}  // namespace

TangentVectorAtTorus dkappaVertical(const AngleVector& angles, const Matrix& y) {
  requireSquare(y, "dkappaVertical");
  if (y.rows() != angles.n()) throw InputError("dkappaVertical: dimension mismatch");
  requireSkew(y, "dkappaVertical");
  if (offDiagonalResidual(y) > kShapeTol) throw InputError("dkappaVertical: not diagonal");
  return {angles, y};
}

TangentVectorAtTorus dkappaHorizontal(const AngleVector& angles, const Matrix& x) {
  requireSquare(x, "dkappaHorizontal");
  if (x.rows() != angles.n()) throw InputError("dkappaHorizontal: dimension mismatch");
  requireSkew(x, "dkappaHorizontal");
  if (x.diagonal().cwiseAbs().maxCoeff() > kShapeTol) {
    throw InputError("dkappaHorizontal: element has a diagonal component");
  }
  const Matrix a = torusElement(angles.theta());
  return {angles, a.adjoint() * x * a - x};
}

Matrix transportField(const Matrix& u, const TangentVectorAtTorus& tangent) {
  requireSameDim(u, tangent.value, "transportField");
  if (unitarityResidual(u) > kUnitaryTol) throw InputError("transportField: u is not unitary");
  return u * tangent.value * u.adjoint();
}

RealVector MetricComponents::inverseDiagonal() const { return diagonal.cwiseInverse(); }

double MetricComponents::sqrtDeterminant() const { return std::sqrt(diagonal.prod()); }

MetricComponents metricComponents(const AngleVector& angles, const GeneratorBasis& basis) {
  return metricComponents(angles, basis, Matrix::Identity(basis.n(), basis.n()));
}

MetricComponents metricComponents(const AngleVector& angles, const GeneratorBasis& basis,
                                  const Matrix& u) {
  if (angles.n() != basis.n()) throw InputError("metricComponents: dimension mismatch");
  if (!(minAngularGap(angles.theta()) > kDegeneracyEps)) {
    throw DegenerateError("metricComponents: coincident eigenangles, metric is singular");
  }

  const std::size_t d = basis.size();
  std::vector<Matrix> fields;
  fields.reserve(d);
  MetricComponents out;
  out.closedForm.resize(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix& g = basis[k].matrix;
    const auto pair = basis.pairOf(k);
    TangentVectorAtTorus t = pair ? dkappaHorizontal(angles, g) : dkappaVertical(angles, g);
    fields.push_back(transportField(u, t));
    if (pair) {
      const double s = std::sin(0.5 * (angles[pair->i - 1] - angles[pair->j - 1]));
      out.closedForm(static_cast<Eigen::Index>(k)) = 4.0 * s * s;
    } else {
      out.closedForm(static_cast<Eigen::Index>(k)) = 1.0;
    }
  }

  out.diagonal.resize(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const Complex g = traceMetric(fields[k], fields[l]);
      if (k == l) {
        out.diagonal(static_cast<Eigen::Index>(k)) = g.real();
        out.maxClosedFormResidual =
            std::max(out.maxClosedFormResidual,
                     std::abs(g - out.closedForm(static_cast<Eigen::Index>(k))));
      } else {
        out.maxOffDiagonal = std::max(out.maxOffDiagonal, std::abs(g));
      }
    }
  }
  return out;
}

VerificationReport verifyMetric(int n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.check = "metric-N" + std::to_string(n);
  report.tolerance = kShapeTol;
  report.seed = seed;
  const GeneratorBasis basis = buildBasis(n, AlgebraKind::FullUnitary);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const AngleVector angles = AngleVector::canonical(randomRegularAngles(n, 0.05, rng));
    const Matrix u = randomUnitary(n, rng);
    const MetricComponents m = metricComponents(angles, basis, u);
    const std::string tag = "sample " + std::to_string(s);
    ++report.samples;
    report.record(m.maxOffDiagonal, 1.0, false, tag + " off-diagonal");
    report.record(m.maxClosedFormResidual, 1.0, false, tag + " closed form");
    // Each pair contributes g_kk = g_ll, so sqrt(det g) is one factor per pair.
    const double j = vandermonde(angles);
    if (!(std::abs(m.sqrtDeterminant() - j * j) < 1e-10 * std::max(j * j, 1.0))) {
      report.fail(tag + ": sqrt(det g) differs from J^2");
    }
  }
  return report;
}

}  // namespace weyl
