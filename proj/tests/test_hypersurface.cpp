#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/hypersurface.hpp"
#include "jordanaff/verify.hpp"

using namespace jordanaff;

namespace {

FamilySpec spec(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

HypersurfaceModel make_model(const FamilySpec& s, int L1) { return build_model(build(s), Rational(L1)); }

}  // namespace

TEST(ScaleConstant, HandValues) {
  EXPECT_DOUBLE_EQ(scale_constant(1, -1.0), 0.5);
  EXPECT_DOUBLE_EQ(scale_constant(1, 1.0), -0.5);
  EXPECT_NEAR(scale_constant(2, 2.0), -std::sqrt(3.0) / 36.0, 1e-15);
  EXPECT_DOUBLE_EQ(scale_constant(0, -1.0), 1.0);
  EXPECT_THROW(scale_constant(1, 0.0), AlgebraError);
}

TEST(Model, ComplexFieldGivesCircleOfRadiusOneHalf) {
  for (int L1 : {-1, 1}) {
    const HypersurfaceModel m = make_model(spec(Family::kComplexField), L1);
    EXPECT_EQ(m.n(), 1u);
    for (const auto& p : sample_points(m, 8, 7)) EXPECT_NEAR(std::hypot(p[0], p[1]), 0.5, 1e-8);
  }
}

TEST(Model, EuclideanAlgebrasGiveDefiniteMetrics) {
  for (const auto& s : {spec(Family::kSymmetricR, 3), spec(Family::kHermitianC, 2), spec(Family::kOctonionHermitian3)}) {
    const Inertia neg = inertia(make_model(s, -1).g);
    EXPECT_EQ(neg.positive, expected_dim(s) - 1) << s.str();
    const Inertia pos = inertia(make_model(s, 2).g);
    EXPECT_EQ(pos.negative, expected_dim(s) - 1) << s.str();
  }
}

TEST(Model, QuadraticFactorsAreHyperquadrics) {
  FamilySpec s = spec(Family::kQuadraticFactor, 4);
  s.q_signature = {1, -1, 1};
  const HypersurfaceModel m = make_model(s, -1);
  for (const auto& a : m.A) EXPECT_TRUE(a.is_zero());
  const HypersurfaceModel sym = make_model(spec(Family::kSymmetricR, 3), -1);
  EXPECT_TRUE(std::any_of(sym.A.begin(), sym.A.end(), [](const Rational& a) { return !a.is_zero(); }));
}

TEST(Model, ChecksPassAndBasePointIsOnLevelSet) {
  const HypersurfaceModel m = make_model(spec(Family::kHermitianH, 2), -1);
  EXPECT_TRUE(m.symmetric_ok);
  EXPECT_TRUE(m.apolarity_ok);
  ASSERT_TRUE(m.gauss_ok.has_value());
  EXPECT_TRUE(*m.gauss_ok);
  ASSERT_TRUE(m.pair.has_value());
  Vec<double> o(m.e.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = m.C * m.e[i].to_double();
  EXPECT_NEAR(level_residual(m, o), 0.0, 1e-12);
  const Vec<double> xi = affine_normal(m);
  for (std::size_t i = 0; i < o.size(); ++i) EXPECT_NEAR(xi[i], -m.L1.to_double() * o[i], 1e-12);
}

TEST(Model, GaussResidualVanishesOnRandomTriples) {
  const HypersurfaceModel m = make_model(spec(Family::kSkewHermitianH, 2), 2);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(-2, 2);
  auto rand_v0 = [&] {
    Vec<Rational> c(m.n());
    for (auto& x : c) x = Rational(d(rng));
    return m.from_v0(c);
  };
  for (int t = 0; t < 5; ++t) {
    const auto r = gauss_residual(m, rand_v0(), rand_v0(), rand_v0());
    for (const auto& x : r) EXPECT_TRUE(x.is_zero());
  }
  EXPECT_THROW(curvature(m, m.e, rand_v0()), AlgebraError);
}

TEST(Model, SampledPointsStayOnLevelSet) {
  for (const auto& s : {spec(Family::kFullMatrixR, 2), spec(Family::kSkewC, 2)}) {
    const HypersurfaceModel m = make_model(s, 1);
    EXPECT_TRUE(level_set_check(m, 50, 3).pass) << s.str();
    EXPECT_TRUE(exp_invariance(m, 10, 4).pass) << s.str();
  }
}

TEST(Reconstruct, OneDimensionalModels) {
  // g = [[1]], A = 0: L1 < 0 gives the split algebra R + R, L1 > 0 the field C.
  const Matrix<Rational> g = Matrix<Rational>::identity(1);
  const std::vector<Rational> A = {Rational(0)};
  const Reconstruction split = reconstruct_algebra(1, g, A, Rational(-1));
  EXPECT_TRUE(split.jordan);
  EXPECT_TRUE(split.semisimple);
  const SemisimpleResult rs = is_semisimple(split.algebra);
  EXPECT_EQ(rs.signature.positive, 2u);
  const Reconstruction field = reconstruct_algebra(1, g, A, Rational(1));
  const SemisimpleResult fs = is_semisimple(field.algebra);
  EXPECT_EQ(fs.signature.positive, 1u);
  EXPECT_EQ(fs.signature.negative, 1u);
}

TEST(Reconstruct, RejectsInvalidInvariants) {
  Matrix<Rational> g = Matrix<Rational>::identity(2);
  std::vector<Rational> A(8, Rational(0));
  EXPECT_THROW(reconstruct_algebra(2, g, A, Rational(0)), AlgebraError);
  Matrix<Rational> asym = g;
  asym(0, 1) = Rational(1);
  EXPECT_THROW(reconstruct_algebra(2, asym, A, Rational(-1)), AlgebraError);
  std::vector<Rational> not_symmetric = A;
  not_symmetric[1] = Rational(1);  // A(0,0,1) without its permutations
  EXPECT_THROW(reconstruct_algebra(2, g, not_symmetric, Rational(-1)), AlgebraError);
  std::vector<Rational> not_apolar = A;
  not_apolar[0] = Rational(1);  // A(0,0,0) = 1: trace over the first two slots is nonzero
  EXPECT_THROW(reconstruct_algebra(2, g, not_apolar, Rational(-1)), AlgebraError);
  EXPECT_THROW(reconstruct_algebra(2, Matrix<Rational>(2, 2), A, Rational(-1)), AlgebraError);
}

TEST(Reconstruct, RoundTripsCatalogModels) {
  for (const auto& s : {spec(Family::kHermitianC, 3), spec(Family::kSymmetricC, 2), spec(Family::kFullMatrixH, 2)})
    for (int L1 : {-1, 2}) EXPECT_TRUE(roundtrip_check(make_model(s, L1)).pass) << s.str();
}

TEST(Verify, TangentOrderIsOne) {
  const TangentOrder t = tangent_order(build(spec(Family::kHermitianC, 3)), 5);
  ASSERT_EQ(t.error.size(), 3u);
  EXPECT_NEAR(t.order, 1.0, 0.01);
}

TEST(Verify, TraceFormAndAffineNormalChecks) {
  for (int L1 : {-1, 1, 2}) {
    const HypersurfaceModel m = make_model(spec(Family::kSymmetricR, 3), L1);
    EXPECT_TRUE(trace_form_check(m).pass);
    EXPECT_TRUE(affine_normal_check(m).pass);
  }
}
