#include <gtest/gtest.h>

#include <sstream>

#include "jordanaff/catalog.hpp"
#include "jordanaff/io.hpp"

using namespace jordanaff;

namespace {

FamilySpec spec(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

std::string error_of(const std::string& text) {
  try {
    deserialize_algebra(text, "alg.json");
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchema);
    return e.what();
  }
  return "";
}

const char* kTwoDim = R"({"name": "t", "dim": 2, "mode": "rational", "unity": null,
  "c": [[["1", "0"], ["0", "1/3"]], [["0", "1/3"], ["0", "0"]]]})";

}  // namespace

TEST(AlgebraJson, ByteExactRoundTrip) {
  for (const auto& s : desk_specs()) {
    if (expected_dim(s) > 16) continue;
    const std::string a = serialize_algebra(build(s));
    const JordanAlgebra back = deserialize_algebra(a);
    EXPECT_EQ(serialize_algebra(back), a) << s.str();
    EXPECT_EQ(back.tensor(), build(s).tensor()) << s.str();
  }
}

TEST(AlgebraJson, ThirdsSurvive) {
  const JordanAlgebra J = deserialize_algebra(kTwoDim);
  EXPECT_EQ(J.c(0, 1, 1), Rational(1, 3));
  EXPECT_NE(serialize_algebra(J).find("\"1/3\""), std::string::npos);
  EXPECT_EQ(serialize_algebra(deserialize_algebra(serialize_algebra(J))), serialize_algebra(J));
}

TEST(AlgebraJson, RejectsAsymmetricTensorAtFirstIndex) {
  const std::string bad = R"({"name": "t", "dim": 2, "mode": "rational", "unity": null,
    "c": [[["1", "0"], ["1", "0"]], [["0", "0"], ["0", "1"]]]})";
  const std::string msg = error_of(bad);
  EXPECT_NE(msg.find("alg.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("c[0][1][0]"), std::string::npos) << msg;
}

TEST(AlgebraJson, DiagnosticsNameTheField) {
  EXPECT_NE(error_of(R"({"name": "t", "mode": "rational", "c": []})").find("dim"), std::string::npos);
  EXPECT_NE(error_of(R"({"name": "t", "dim": 1, "mode": "exact", "c": [[["1"]]]})").find("mode"), std::string::npos);
  EXPECT_NE(error_of(R"({"name": "t", "dim": 1, "mode": "rational", "c": [[["x"]]]})").find("c[0][0][0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"name": "t", "dim": 2, "mode": "rational", "c": [[["1","0"]]]})").find("c"),
            std::string::npos);
  EXPECT_NE(error_of("{not json").find("<root>"), std::string::npos);
  EXPECT_NE(error_of(R"({"name": "t", "dim": 1, "mode": "rational", "unity": ["2"], "c": [[["1"]]]})").find("unity"),
            std::string::npos);
}

TEST(AlgebraJson, IntegersAndDecimalsAccepted) {
  const JordanAlgebra J =
      deserialize_algebra(R"({"name": "r", "dim": 1, "mode": "float", "unity": [1], "c": [[[1.0]]]})");
  EXPECT_EQ(J.mode(), Mode::kFloat);
  EXPECT_EQ(J.c(0, 0, 0), Rational(1));
}

TEST(ReportJson, MapAndListForms) {
  VerificationReport rep;
  rep.target = "x";
  rep.checks.push_back({"a", true, 0.0, 3, 7, ""});
  rep.checks.push_back({"b", false, 0.5, 3, 7, "sample 1"});
  const Json j = report_to_json(rep);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["seed"], 7);
  EXPECT_TRUE(j["results"]["a"]["pass"].get<bool>());
  EXPECT_DOUBLE_EQ(j["results"]["b"]["max_residual"].get<double>(), 0.5);
}

TEST(ModelJson, ReloadsForSampling) {
  const HypersurfaceModel m = build_model(build(spec(Family::kHermitianC, 2)), Rational(-1, 2));
  const Json j = model_to_json(m);
  for (const char* k : {"family", "n", "L1", "C", "k_dim", "p_dim", "apolarity_ok", "gauss_ok"})
    EXPECT_TRUE(j.contains(k)) << k;
  const HypersurfaceModel back = model_from_json(Json::parse(j.dump()), "model.json");
  EXPECT_EQ(back.L1, m.L1);
  EXPECT_DOUBLE_EQ(back.C, m.C);
  EXPECT_EQ(back.A, m.A);
}

TEST(InvariantsJson, MetricAndCubicRoundTrip) {
  const HypersurfaceModel m = build_model(build(spec(Family::kSymmetricR, 3)), Rational(2));
  const Matrix<Rational> g = metric_from_json(Json::parse(metric_to_json(m).dump()), "g.json");
  EXPECT_TRUE(g == m.g);
  const Json a = cubic_form_to_json(m);
  EXPECT_EQ(cubic_form_from_json(a, m.n(), "a.json"), m.A);
  EXPECT_EQ(cubic_form_from_json(a["A"], m.n(), "a.json"), m.A);
  EXPECT_THROW(cubic_form_from_json(a, m.n() + 1, "a.json"), AlgebraError);
  EXPECT_TRUE(metric_from_json(Json::parse(R"([["1","0"],["0","-1/2"]])"), "g.json")(1, 1) == Rational(-1, 2));
}

TEST(CalabiJson, ParsesSpec) {
  const Json j = Json::parse(R"({"factors": [{"family": "reals", "L1": -1},
    {"family": "symmetric_r", "params": {"m": 2, "gamma": [1, -1]}, "L1": "1/2"}], "L1": 2})");
  const CalabiSpec s = calabi_spec_from_json(j, "spec.json");
  ASSERT_EQ(s.factors.size(), 2u);
  EXPECT_EQ(s.factors[1].L1, Rational(1, 2));
  EXPECT_EQ(s.factors[1].algebra.dim(), 3u);
  try {
    calabi_spec_from_json(Json::parse(R"({"factors": [{"family": "nope", "L1": 1}], "L1": 1})"), "spec.json");
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("factors[0].family"), std::string::npos) << e.what();
  }
}

TEST(PointsCsv, SeventeenDigits) {
  std::ostringstream os;
  write_points_csv(os, {{0.1, -2.0 / 3.0}});
  EXPECT_EQ(os.str(), "0.10000000000000001,-0.66666666666666663\n");
}
