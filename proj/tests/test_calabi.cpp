#include <gtest/gtest.h>

#include <cmath>

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"

using namespace jordanaff;

namespace {

FamilySpec spec(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

CalabiSpec two_reals(const Rational& L1) {
  const JordanAlgebra R = build(spec(Family::kReals));
  return CalabiSpec{{{R, Rational(-1)}, {R, Rational(-1)}}, L1};
}

}  // namespace

TEST(DirectSum, BlockStructure) {
  const JordanAlgebra A = build(spec(Family::kSymmetricR, 2));
  const JordanAlgebra B = build(spec(Family::kComplexField));
  const JordanAlgebra S = direct_sum({A, B});
  EXPECT_EQ(S.dim(), 5u);
  ASSERT_TRUE(S.unity().has_value());
  const Vec<Rational> e = *S.unity();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(e[i], (*A.unity())[i]);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(e[3 + i], (*B.unity())[i]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) EXPECT_TRUE(S.c(i, j, k).is_zero());
  EXPECT_TRUE(check_jordan(S, 1, 3).pass());
}

TEST(Compose, SingleFactorIsBuildModel) {
  const JordanAlgebra J = build(spec(Family::kHermitianC, 2));
  const CalabiModel cm = compose(CalabiSpec{{{J, Rational(2)}}, Rational(2)});
  const HypersurfaceModel m = build_model(J, Rational(2));
  EXPECT_EQ(cm.model.algebra.tensor(), m.algebra.tensor());
  EXPECT_EQ(cm.model.A, m.A);
  EXPECT_EQ(cm.c.size(), 1u);
  EXPECT_DOUBLE_EQ(cm.c[0], 1.0);
}

TEST(Compose, ConstantsAreRatiosOfScaleConstants) {
  const JordanAlgebra A = build(spec(Family::kSymmetricR, 2));
  const JordanAlgebra B = build(spec(Family::kComplexField));
  const CalabiModel cm = compose(CalabiSpec{{{A, Rational(-1)}, {B, Rational(1)}}, Rational(-1)});
  ASSERT_EQ(cm.dims, (std::vector<std::size_t>{3, 2}));
  EXPECT_DOUBLE_EQ(cm.model.C, scale_constant(4, -1.0));
  EXPECT_DOUBLE_EQ(cm.C_factor[0], scale_constant(2, -1.0));
  EXPECT_DOUBLE_EQ(cm.C_factor[1], scale_constant(1, 1.0));
  for (std::size_t a = 0; a < 2; ++a) EXPECT_DOUBLE_EQ(cm.c[a], cm.model.C / cm.C_factor[a]);
}

TEST(Compose, CentralDirectionsAreTraceless) {
  const JordanAlgebra A = build(spec(Family::kSymmetricR, 2));
  const JordanAlgebra B = build(spec(Family::kReals));
  const JordanAlgebra C = build(spec(Family::kHermitianC, 2));
  const CalabiModel cm = compose(CalabiSpec{{{A, Rational(-1)}, {B, Rational(1)}, {C, Rational(2)}}, Rational(-1)});
  const auto dirs = central_directions(cm);
  ASSERT_EQ(dirs.size(), 2u);
  const Vec<Rational> tau = trace_vector<Rational>(cm.model.algebra);
  for (const auto& d : dirs) EXPECT_TRUE(dot<Rational>(tau, d).is_zero());
}

TEST(Compose, TwoRealsTraceTheHyperbola) {
  for (int L1 : {-1, 1, 2}) {
    const CalabiModel cm = compose(two_reals(Rational(L1)));
    const double C = cm.model.C;
    for (double t : {-1.0, 0.0, 0.5, 2.0}) {
      const std::vector<double> ts = {t, -t};
      const Vec<double> p = compose_point(cm, ts, {{1.0}, {1.0}});
      EXPECT_NEAR(p[0] * p[1], C * C, 1e-12 * C * C);
      EXPECT_NEAR(level_residual(cm.model, p), 0.0, 1e-12);
    }
  }
}

TEST(Compose, RejectsT0Violations) {
  const CalabiModel cm = compose(two_reals(Rational(-1)));
  const std::vector<double> bad = {0.3, 0.0};
  try {
    compose_point(cm, bad, {{1.0}, {1.0}});
    FAIL() << "expected a constraint violation";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConstraintViolated);
  }
  const std::vector<double> wrong_count = {0.0};
  EXPECT_THROW(compose_point(cm, wrong_count, {{1.0}}), AlgebraError);
}
