#include "weyl/json_io.hpp"

namespace weyl {

nlohmann::json rowsToJson(const Matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rowsFromJson(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw InputError("matrix rows must be a non-empty array");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw InputError("matrix row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& z = row[j];
      if (z.is_number()) {
        a(i, j) = Complex(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        a(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
      } else {
        throw InputError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not [re, im]");
      }
    }
  }
  return a;
}

nlohmann::json matrixToJson(const Matrix& a) {
  return {{"dim", a.rows()}, {"rows", rowsToJson(a)}};
}

Matrix matrixFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows")) throw InputError("matrix JSON needs \"rows\"");
  Matrix a = rowsFromJson(j.at("rows"));
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<long>() != a.rows()) {
      throw InputError("matrix JSON \"dim\" does not match the row count");
    }
  }
  return a;
}

nlohmann::json basisToJson(const GeneratorBasis& basis) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Generator& g : basis.generators())
    gens.push_back({{"label", g.label}, {"matrix", rowsToJson(g.matrix)}});
  return {{"n", basis.n()}, {"kind", toString(basis.kind())}, {"generators", gens}};
}

nlohmann::json polarToJson(const PolarForm& pf) {
  const RealVector& theta = pf.angles.theta();
  return {{"theta", std::vector<double>(theta.data(), theta.data() + theta.size())},
          {"u", rowsToJson(pf.u)},
          {"regular", pf.regular},
          {"minGap", pf.minGap}};
}

}  // namespace weyl
