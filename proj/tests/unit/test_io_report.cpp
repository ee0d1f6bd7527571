#include <gtest/gtest.h>

#include "weyl/json_io.hpp"
#include "weyl/report.hpp"
#include "weyl/sampling.hpp"

using namespace weyl;

TEST(JsonIo, MatrixRoundTrip) {
  Rng rng(1);
  const Matrix v = randomUnitary(3, rng);
  const auto j = matrixToJson(v);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(matrixFromJson(nlohmann::json::parse(j.dump())), v);
}

TEST(JsonIo, RejectsMalformedMatrices) {
  using nlohmann::json;
  EXPECT_THROW(matrixFromJson(json::object()), InputError);
  EXPECT_THROW(matrixFromJson(json::parse(R"({"dim":2,"rows":[[[1,0],[0,0]]]})")), InputError);
  EXPECT_THROW(matrixFromJson(json::parse(R"({"dim":3,"rows":[[[1,0],[0,0]],[[0,0],[1,0]]]})")),
               InputError);
  EXPECT_THROW(matrixFromJson(json::parse(R"({"rows":[["a"]]})")), InputError);
}

TEST(JsonIo, BasisAndPolarSchemas) {
  const auto b = basisToJson(buildBasis(2, AlgebraKind::SpecialUnitary));
  EXPECT_EQ(b["kind"], "su");
  EXPECT_EQ(b["generators"].size(), 3u);
  EXPECT_EQ(b["generators"][1]["label"], "Xk_12");
  EXPECT_EQ(b["generators"][1]["matrix"][0][1][0].get<double>(), 1.0 / std::sqrt(2.0));

  const auto p = polarToJson(polarDecompose(Matrix::Identity(2, 2)));
  EXPECT_EQ(p["regular"], false);
  EXPECT_EQ(p["theta"].size(), 2u);
  EXPECT_TRUE(p.contains("u"));
  EXPECT_TRUE(p.contains("minGap"));
}

TEST(Report, RecordAndRejudge) {
  VerificationReport r;
  r.check = "x";
  r.tolerance = 1e-6;
  r.record(1e-8, 1.0, false, "a");
  EXPECT_TRUE(r.pass);
  r.record(1e-5, 10.0, true, "b");
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failures.size(), 1u);
  r.rejudge(1e-5);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.failures.empty());
  r.fail("structural");
  r.rejudge(1.0);
  EXPECT_FALSE(r.pass);

  const auto j = toJson(r);
  for (const char* key : {"check", "samples", "maxAbsErr", "maxRelErr", "pass", "tolerance", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(allPassed({r}));
}

TEST(Report, NanNeverPasses) {
  VerificationReport r;
  r.tolerance = 1.0;
  r.record(std::nan(""), 1.0, false, "nan");
  EXPECT_FALSE(r.pass);
}
