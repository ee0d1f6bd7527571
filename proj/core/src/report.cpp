#include "weyl/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weyl {

namespace {
// Caps the failure list; the first few are enough to diagnose a sweep.
constexpr std::size_t kMaxListedFailures = 20;

std::string describe(const std::string& label, bool relative, double measured, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << label << ": " << (relative ? "rel" : "abs") << " err " << measured << " >= " << tol;
  return os.str();
}
}  // namespace

void VerificationReport::record(double absErr, double scale, bool useRelative,
                                const std::string& label) {
  const double relErr = absErr / scale;
  maxAbsErr = std::max(maxAbsErr, absErr);
  maxRelErr = std::max(maxRelErr, relErr);
  relative = useRelative;
  const double measured = useRelative ? relErr : absErr;
  if (!(measured < tolerance)) {
    pass = false;
    if (failures.size() < kMaxListedFailures)
      failures.push_back(describe(label, useRelative, measured, tolerance));
  }
}

void VerificationReport::fail(const std::string& reason) {
  pass = false;
  ++structuralFailures;
  if (failures.size() < kMaxListedFailures) failures.push_back(reason);
}

void VerificationReport::rejudge(double newTolerance) {
  tolerance = newTolerance;
  const double measured = relative ? maxRelErr : maxAbsErr;
  if (structuralFailures > 0) return;
  failures.clear();
  pass = measured < tolerance;
  if (!pass) failures.push_back(describe("worst sample", relative, measured, tolerance));
}

nlohmann::json toJson(const VerificationReport& report) {
  nlohmann::json j = {
      {"check", report.check},         {"samples", report.samples},
      {"maxAbsErr", report.maxAbsErr}, {"maxRelErr", report.maxRelErr},
      {"pass", report.pass},           {"tolerance", report.tolerance},
      {"seed", report.seed},
  };
  if (!report.failures.empty()) j["failures"] = report.failures;
  return j;
}

bool allPassed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

}  // namespace weyl
