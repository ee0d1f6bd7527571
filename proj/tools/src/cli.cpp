#include "weyl_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weyl/json_io.hpp"
#include "weyl/laplacian.hpp"
#include "weyl/su3_operators.hpp"
#include "weyl/tangent_metric.hpp"

namespace weyl::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 7;
const char* const kSeedEnv = "WEYL_LAPLACE_SEED";
const std::vector<std::string> kSuites = {"commutators", "metric",     "curvature", "trig",
                                          "laplacian",   "characters", "su"};

// Usage problems detected after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<std::uint64_t> seedFlag;
  std::map<std::string, double> tolerances;
  StencilConfig stencil;
  std::optional<int> samples;
  std::string format = "json";
  std::string output;

  std::uint64_t seed() const {
    if (seedFlag) return *seedFlag;
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const std::string text(env);
        const auto value = std::stoull(text, &used);
        if (used == text.size()) return value;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
    return kDefaultSeed;
  }

  int samplesOr(int fallback) const {
    if (!samples) return fallback;
    if (*samples < 1) throw UsageError("--samples must be positive");
    return *samples;
  }
};

void addCommonOptions(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--seed", cfg.seedFlag, "RNG seed (falls back to $WEYL_LAPLACE_SEED)");
  cmd.add_option("--samples", cfg.samples, "Number of random samples");
  cmd.add_option("--h", cfg.stencil.h, "Finite-difference step")->capture_default_str();
  cmd.add_option("--order", cfg.stencil.order, "Stencil order (2 or 4)")->capture_default_str();
  cmd.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  cmd.add_option("--output", cfg.output, "Write the report to this file");
}

std::string formatNumber(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string renderReports(const std::string& suite, const std::vector<VerificationReport>& reports,
                          const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(toJson(r));
    os << json{{"suite", suite}, {"pass", allPassed(reports)}, {"reports", arr}}.dump(2) << '\n';
  } else if (format == "csv") {
    os << "check,samples,maxAbsErr,maxRelErr,pass,tolerance,seed\n";
    for (const auto& r : reports) {
      os << r.check << ',' << r.samples << ',' << json(r.maxAbsErr).dump() << ','
         << json(r.maxRelErr).dump() << ',' << (r.pass ? "true" : "false") << ','
         << json(r.tolerance).dump() << ',' << r.seed << '\n';
    }
  } else {
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.check << "  samples=" << r.samples
         << "  maxAbs=" << formatNumber(r.maxAbsErr) << "  maxRel=" << formatNumber(r.maxRelErr)
         << "  tol=" << formatNumber(r.tolerance) << '\n';
      for (const auto& f : r.failures) os << "    " << f << '\n';
    }
    os << suite << ": " << (allPassed(reports) ? "all checks passed" : "FAILED") << '\n';
  }
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw InputError("cannot open output file " + cfg.output);
  file << text;
}

std::vector<int> dimensionsOr(const std::optional<int>& n, std::vector<int> fallback) {
  if (n) return {*n};
  return fallback;
}

// Tolerance override keys match a check name or any prefix of it ending at a
// dash, so "main-theorem" covers "main-theorem-U2-defining".
void applyOverrides(std::vector<VerificationReport>& reports,
                    const std::map<std::string, double>& overrides) {
  for (auto& r : reports) {
    for (const auto& [key, tol] : overrides) {
      const bool whole = r.check == key;
      const bool prefix = r.check.size() > key.size() && r.check.compare(0, key.size(), key) == 0 &&
                          r.check[key.size()] == '-';
      if (whole || prefix) r.rejudge(tol);
    }
  }
}

Representation namedRep(const std::string& name, int n) {
  if (name == "defining") return definingRep(n);
  if (name == "trivial") return trivialRep(n);
  if (name == "sym2") return symmetricSquare(definingRep(n));
  if (name == "alt2") return antisymmetricSquare(definingRep(n));
  throw UsageError("unknown --rep '" + name + "' (defining, trivial, sym2, alt2)");
}

std::vector<VerificationReport> runSuite(const std::string& suite, const std::optional<int>& n,
                                         const std::string& rep,
                                         const std::optional<std::string>& partition,
                                         const RunConfig& cfg) {
  const std::uint64_t seed = cfg.seed();
  const StencilConfig& st = cfg.stencil;
  std::vector<VerificationReport> reports;
  auto requireN = [&](int lo, int hi) {
    if (n && (*n < lo || *n > hi)) {
      throw UsageError("suite " + suite + " needs --n in " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    }
  };

  if (suite == "commutators") {
    requireN(3, 3);
    const Su3Operators ops = su3Operators();
    reports.push_back(verifyCommutatorTable(ops));
    reports.push_back(verifyNotationIdentities(ops));
    reports.push_back(verifyRoots(ops, seed));
  } else if (suite == "metric") {
    requireN(2, 8);
    for (int d : dimensionsOr(n, {2, 3, 4})) reports.push_back(verifyMetric(d, cfg.samplesOr(200), seed));
  } else if (suite == "curvature") {
    requireN(2, 6);
    for (int d : dimensionsOr(n, {2, 3, 4, 5, 6})) {
      reports.push_back(verifyCurvatureIdentity(d, cfg.samplesOr(50), seed, st));
      reports.push_back(verifyRadialRewriting(d, 5, 2, seed, st));
    }
  } else if (suite == "trig") {
    reports.push_back(verifyTrigIdentity(cfg.samplesOr(10000), seed));
  } else if (suite == "laplacian") {
    requireN(2, 4);
    for (int d : dimensionsOr(n, {2, 3})) {
      reports.push_back(verifyMainTheorem(namedRep(rep, d), cfg.samplesOr(50), seed, st));
      reports.push_back(verifyRadialForms(d, 10, seed, st));
      reports.push_back(verifyHermitianBookkeeping(d, 10, seed, st));
    }
  } else if (suite == "characters") {
    std::vector<Partition> shapes;
    if (partition) {
      shapes.push_back(Partition::parse(*partition));
      if (n && shapes.back().n() != *n) throw UsageError("--partition length must equal --n");
    } else {
      for (const char* p : {"1,0", "1,0,0", "1,1,0", "2,0,0"}) shapes.push_back(Partition::parse(p));
    }
    for (const auto& lambda : shapes)
      reports.push_back(verifyCharacterEigenfunction(lambda, cfg.samplesOr(20), seed, st));
  } else if (suite == "su") {
    requireN(2, 4);
    for (int d : dimensionsOr(n, {2, 3})) reports.push_back(verifySuRoute(d, cfg.samplesOr(10), seed, st));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  applyOverrides(reports, cfg.tolerances);
  return reports;
}

std::string renderBasis(const GeneratorBasis& basis, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << basisToJson(basis).dump(2) << '\n';
  } else if (format == "csv") {
    os << "label,row,col,re,im\n";
    for (const auto& g : basis.generators())
      for (Eigen::Index i = 0; i < g.matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < g.matrix.cols(); ++j)
          os << g.label << ',' << i + 1 << ',' << j + 1 << ',' << json(g.matrix(i, j).real()).dump()
             << ',' << json(g.matrix(i, j).imag()).dump() << '\n';
  } else {
    os << toString(basis.kind()) << "(" << basis.n() << "): " << basis.size() << " generators\n";
    for (const auto& g : basis.generators()) {
      os << g.label << ":\n";
      for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
        os << " ";
        for (Eigen::Index j = 0; j < g.matrix.cols(); ++j)
          os << "  " << std::setw(20) << formatNumber(g.matrix(i, j).real()) + "+" +
                                             formatNumber(g.matrix(i, j).imag()) + "i";
        os << '\n';
      }
    }
  }
  return os.str();
}

std::string renderPolar(const PolarForm& pf, double reconstructionError,
                        const std::string& format) {
  json j = polarToJson(pf);
  j["reconstructionError"] = reconstructionError;
  std::ostringstream os;
  if (format == "json") {
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "index,theta\n";
    for (int k = 0; k < pf.angles.n(); ++k) os << k + 1 << ',' << json(pf.angles[k]).dump() << '\n';
  } else {
    os << "theta:";
    for (int k = 0; k < pf.angles.n(); ++k) os << ' ' << formatNumber(pf.angles[k]);
    os << "\nregular: " << (pf.regular ? "yes" : "no") << "  minGap: " << formatNumber(pf.minGap)
       << "\nreconstruction error: " << formatNumber(reconstructionError) << '\n';
  }
  return os.str();
}

std::string renderCharacter(const Partition& lambda, const CharacterEigenvalue& eig,
                            const std::optional<double>& oracle, const VerificationReport& report,
                            const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json j = {{"partition", lambda.toString()}, {"n", lambda.n()},        {"mean", eig.mean},
              {"stddev", eig.stddev},           {"maxImag", eig.maxImag}, {"report", toJson(report)}};
    j["oracle"] = oracle ? json(*oracle) : json(nullptr);
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "partition,mean,stddev,oracle,pass\n"
       << '"' << lambda.toString() << "\"," << json(eig.mean).dump() << ','
       << json(eig.stddev).dump() << ',' << (oracle ? json(*oracle).dump() : "") << ','
       << (report.pass ? "true" : "false") << '\n';
  } else {
    os << "partition (" << lambda.toString() << "): eigenvalue " << formatNumber(eig.mean)
       << " +- " << formatNumber(eig.stddev);
    if (oracle) os << "  oracle " << formatNumber(*oracle);
    os << "  " << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace

std::map<std::string, double> extractToleranceOverrides(std::vector<std::string>& args) {
  static const std::string prefix = "--tol.";
  std::map<std::string, double> out;
  std::vector<std::string> rest;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a.rfind(prefix, 0) != 0) {
      rest.push_back(a);
      continue;
    }
    std::string name = a.substr(prefix.size());
    std::string value;
    if (const auto eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else if (k + 1 < args.size()) {
      value = args[++k];
    }
    if (name.empty()) throw std::invalid_argument("--tol. needs a check name");
    std::size_t used = 0;
    double tol = 0.0;
    try {
      tol = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || !(tol > 0.0)) {
      throw std::invalid_argument("--tol." + name + " needs a positive number");
    }
    out[name] = tol;
  }
  args = std::move(rest);
  return out;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.tolerances = extractToleranceOverrides(args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Laplacian on U(N) and SU(N) in polar coordinates: checks and tools",
               "weyl-laplace"};
  // --h is the stencil step, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::optional<int> n;
  std::string kind = "u";
  std::string rep = "defining";
  std::optional<std::string> partition;
  std::string suite;
  std::string inputFile;
  bool random = false;

  CLI::App* basisCmd = app.add_subcommand("basis", "Dump the orthonormal generator basis");
  basisCmd->add_option("--n", n, "Matrix size N")->required();
  basisCmd->add_option("--kind", kind, "u or su")->capture_default_str();
  addCommonOptions(*basisCmd, cfg);

  CLI::App* verifyCmd = app.add_subcommand("verify", "Run a verification suite");
  verifyCmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(kSuites));
  verifyCmd->add_option("--n", n, "Restrict to one N");
  verifyCmd->add_option("--rep", rep, "defining, trivial, sym2 or alt2")->capture_default_str();
  verifyCmd->add_option("--partition", partition, "Highest weight, e.g. 1,1,0");
  addCommonOptions(*verifyCmd, cfg);

  CLI::App* polarCmd = app.add_subcommand("polar", "Polar decomposition of a unitary matrix");
  polarCmd->add_option("file", inputFile, "Matrix JSON file");
  polarCmd->add_flag("--random", random, "Use a Haar-random unitary instead of a file");
  polarCmd->add_option("--n", n, "Size of the random unitary");
  addCommonOptions(*polarCmd, cfg);

  CLI::App* charCmd =
      app.add_subcommand("character-eig", "Measure the Laplacian eigenvalue of a character");
  charCmd->add_option("--n", n, "Matrix size N");
  charCmd->add_option("--partition", partition, "Highest weight, e.g. 1,1,0")->required();
  addCommonOptions(*charCmd, cfg);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    try {
      cfg.stencil.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (basisCmd->parsed()) {
      if (*n < 2) throw UsageError("--n must be at least 2");
      AlgebraKind k;
      try {
        k = parseAlgebraKind(kind);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(cfg, renderBasis(buildBasis(*n, k), cfg.format), out);
      return kPass;
    }

    if (verifyCmd->parsed()) {
      const auto reports = runSuite(suite, n, rep, partition, cfg);
      emit(cfg, renderReports(suite, reports, cfg.format), out);
      return allPassed(reports) ? kPass : kCheckFailed;
    }

    if (polarCmd->parsed()) {
      Matrix v;
      if (random == !inputFile.empty()) throw UsageError("polar needs a file or --random");
      if (random) {
        if (!n || *n < 1) throw UsageError("polar --random needs --n >= 1");
        Rng rng(cfg.seed());
        v = randomUnitary(*n, rng);
      } else {
        std::ifstream in(inputFile);
        if (!in) throw InputError("cannot read " + inputFile);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw InputError(inputFile + ": " + e.what());
        }
        v = matrixFromJson(j);
      }
      const PolarForm pf = polarDecompose(v);
      emit(cfg, renderPolar(pf, maxNorm(pf.reconstruct() - v), cfg.format), out);
      return kPass;
    }

    if (charCmd->parsed()) {
      Partition lambda = Partition::parse(*partition);
      if (n && lambda.n() != *n) throw UsageError("--partition length must equal --n");
      const int samples = cfg.samplesOr(20);
      const std::uint64_t seed = cfg.seed();
      const CharacterEigenvalue eig = measureCharacterEigenvalue(lambda, samples, seed, cfg.stencil);
      std::vector<VerificationReport> reports{
          verifyCharacterEigenfunction(lambda, samples, seed, cfg.stencil)};
      applyOverrides(reports, cfg.tolerances);
      std::optional<double> oracle;
      if (const auto r = representationFor(lambda)) {
        oracle = casimirScalar(casimirMatrix(*r, buildBasis(lambda.n(), AlgebraKind::FullUnitary)))
                     .value;
      }
      emit(cfg, renderCharacter(lambda, eig, oracle, reports.front(), cfg.format), out);
      return reports.front().pass ? kPass : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace weyl::cli
