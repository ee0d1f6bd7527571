#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace weyl {

/// Outcome of one verification check. Failures are collected, never thrown,
/// so a sweep always produces a complete report.
struct VerificationReport {
  std::string check;
  int samples = 0;
  double maxAbsErr = 0.0;
  double maxRelErr = 0.0;
  bool pass = true;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  // Which error the tolerance was last held against, and how many failures
  // came from fail() rather than a tolerance comparison.
  bool relative = false;
  int structuralFailures = 0;

  /// Folds one comparison into the running maxima. `scale` divides the
  /// absolute error for the relative figure. `useRelative` picks which
  /// of the two is held against the tolerance.
  void record(double absErr, double scale, bool useRelative, const std::string& label);

  /// Marks the report failed with a reason, without touching the maxima.
  void fail(const std::string& reason);

  /// Re-judges the tolerance comparisons against a new tolerance. Failures
  /// raised through fail() are kept and still fail the report.
  void rejudge(double newTolerance);
};

/// Wire format: { "check", "samples", "maxAbsErr", "maxRelErr", "pass",
/// "tolerance", "seed" }, plus "failures" when non-empty.
nlohmann::json toJson(const VerificationReport& report);

/// Conjunction of `pass` over all reports.
bool allPassed(const std::vector<VerificationReport>& reports);

}  // namespace weyl
