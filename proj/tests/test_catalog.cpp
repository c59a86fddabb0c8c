#include <gtest/gtest.h>

#include <random>

#include "jordanaff/catalog.hpp"
#include "jordanaff/jordan.hpp"

using namespace jordanaff;

namespace {

FamilySpec spec(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

/// Real dimension written out per family.
std::size_t dim_oracle(Family f, std::size_t m) {
  switch (f) {
    case Family::kReals: return 1;
    case Family::kQuadraticFactor: return m;
    case Family::kFullMatrixR: return m * m;
    case Family::kFullMatrixH: return 4 * m * m;
    case Family::kSymmetricR: return m * (m + 1) / 2;
    case Family::kHermitianC: return m * m;
    case Family::kHermitianH: return m * (2 * m - 1);
    case Family::kSplitQuaternionHermitianAsSkew: return m * (2 * m - 1);
    case Family::kSkewHermitianH: return m * (2 * m + 1);
    case Family::kOctonionHermitian3:
    case Family::kSplitOctonionHermitian3R: return 27;
    case Family::kComplexField: return 2;
    case Family::kComplexQuadratic: return 2 * m;
    case Family::kSymmetricC: return m * (m + 1);
    case Family::kFullMatrixC: return 2 * m * m;
    case Family::kSkewC: return 2 * m * (2 * m - 1);
    case Family::kSplitOctonionHermitian3C: return 54;
  }
  return 0;
}

Rational det3(const Vec<Rational>& U) {
  return U[0] * (U[4] * U[8] - U[5] * U[7]) - U[1] * (U[3] * U[8] - U[5] * U[6]) +
         U[2] * (U[3] * U[7] - U[4] * U[6]);
}

Rational pow(Rational x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

TEST(Catalog, SeventeenFamilies) { EXPECT_EQ(family_table().size(), 17u); }

TEST(Catalog, ParsesNamesAndAliases) {
  EXPECT_EQ(parse_family("albert"), Family::kOctonionHermitian3);
  EXPECT_EQ(parse_family("split_quaternion_hermitian"), Family::kSplitQuaternionHermitianAsSkew);
  EXPECT_EQ(parse_family("full_matrix_r"), Family::kFullMatrixR);
  EXPECT_FALSE(parse_family("no_such_family").has_value());
  for (const auto& info : family_table()) EXPECT_EQ(parse_family(info.cli_name), info.family);
}

TEST(Catalog, DimensionsMatchFormulas) {
  for (const auto& s : desk_specs()) {
    const JordanAlgebra J = build(s);
    EXPECT_EQ(J.dim(), dim_oracle(s.family, s.m)) << s.str();
    EXPECT_EQ(expected_dim(s), J.dim()) << s.str();
    ASSERT_TRUE(J.unity().has_value()) << s.str();
  }
}

TEST(Catalog, DeskSpecsCoverEveryFamily) {
  std::set<Family> seen;
  for (const auto& s : desk_specs()) seen.insert(s.family);
  EXPECT_EQ(seen.size(), 17u);
}

TEST(Catalog, ValidationRejectsBadParameters) {
  FamilySpec s = spec(Family::kSymmetricR, 3);
  s.gamma_signs = {1, -1};
  EXPECT_THROW(validate(s), AlgebraError);
  s.gamma_signs = {1, 2, 1};
  EXPECT_THROW(validate(s), AlgebraError);
  FamilySpec t = spec(Family::kFullMatrixR, 3);
  t.gamma_signs = {1, 1, 1};
  EXPECT_THROW(validate(t), AlgebraError);
  FamilySpec q = spec(Family::kFullMatrixR, 0);
  EXPECT_THROW(validate(q), AlgebraError);
  FamilySpec strict = spec(Family::kSymmetricR, 2);
  strict.strict = true;
  EXPECT_THROW(validate(strict), AlgebraError);
}

TEST(Catalog, TraceFormSignatures) {
  // Euclidean algebras have positive definite trace forms; M_m(R) splits as
  // symmetric (positive) plus skew (negative) matrices.
  for (const auto& s : {spec(Family::kSymmetricR, 3), spec(Family::kHermitianC, 3), spec(Family::kHermitianH, 2),
                        spec(Family::kOctonionHermitian3)}) {
    const SemisimpleResult r = is_semisimple(build(s));
    EXPECT_TRUE(r.semisimple);
    EXPECT_EQ(r.signature.positive, dim_oracle(s.family, s.m)) << s.str();
  }
  const SemisimpleResult m3 = is_semisimple(build(spec(Family::kFullMatrixR, 3)));
  EXPECT_EQ(m3.signature.positive, 6u);
  EXPECT_EQ(m3.signature.negative, 3u);
  EXPECT_GT(is_semisimple(build(spec(Family::kSplitOctonionHermitian3R))).signature.negative, 0u);
}

TEST(Catalog, ComplexFieldDeterminant) {
  const JordanAlgebra C = build(spec(Family::kComplexField));
  const Vec<Rational> u = {Rational(3), Rational(4)};
  EXPECT_EQ(determinant(p_operator<Rational>(C, u)), Rational(625));
}

TEST(Catalog, MatrixDeterminantPowers) {
  std::mt19937_64 rng(21);
  const FamilySpec m2 = spec(Family::kFullMatrixR, 2);
  const JordanAlgebra M = build(m2);
  const MatrixModel mm = *matrix_model(m2);
  const FamilySpec s3 = spec(Family::kSymmetricR, 3);
  const JordanAlgebra S = build(s3);
  const MatrixModel sm = *matrix_model(s3);
  for (int t = 0; t < 5; ++t) {
    const Vec<Rational> u = random_element(M.dim(), rng);
    const Vec<Rational> U = realize(mm, u);
    EXPECT_EQ(determinant(p_operator<Rational>(M, u)), pow(U[0] * U[3] - U[1] * U[2], 4));
    const Vec<Rational> w = random_element(S.dim(), rng);
    EXPECT_EQ(determinant(p_operator<Rational>(S, w)), pow(det3(realize(sm, w)), 4));
  }
}

TEST(Catalog, SkewFamilyUsesSymplecticProduct) {
  // A_4(R) with X o Y = (X J Y + Y J X) / 2, J = [[0, I], [-I, 0]].
  const FamilySpec s = spec(Family::kSplitQuaternionHermitianAsSkew, 2);
  const JordanAlgebra A = build(s);
  const MatrixModel mm = *matrix_model(s);
  Vec<Rational> J(16, Rational(0));
  J[0 * 4 + 2] = 1;
  J[1 * 4 + 3] = 1;
  J[2 * 4 + 0] = -1;
  J[3 * 4 + 1] = -1;
  auto mul = [](const Vec<Rational>& a, const Vec<Rational>& b) {
    Vec<Rational> c(16, Rational(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) c[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
    return c;
  };
  std::mt19937_64 rng(2);
  for (int t = 0; t < 5; ++t) {
    const Vec<Rational> x = random_element(A.dim(), rng), y = random_element(A.dim(), rng);
    const Vec<Rational> X = realize(mm, x), Y = realize(mm, y);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(X[i * 4 + j], -X[j * 4 + i]);
    Vec<Rational> expect = mul(mul(X, J), Y);
    const Vec<Rational> other = mul(mul(Y, J), X);
    for (int i = 0; i < 16; ++i) expect[i] = Rational(1, 2) * (expect[i] + other[i]);
    EXPECT_EQ(realize(mm, product<Rational>(A, x, y)), expect);
  }
  // Unity -J.
  Vec<Rational> minus_j = J;
  for (auto& v : minus_j) v = -v;
  EXPECT_EQ(realize(mm, *A.unity()), minus_j);
}

TEST(Catalog, DetFormulaHoldsAcrossDeskSpecs) {
  for (const auto& s : desk_specs()) {
    if (expected_dim(s) > 27) continue;
    const VerificationReport rep = verify_det_formula(s, 5, 3);
    EXPECT_TRUE(rep.pass()) << s.str();
    EXPECT_FALSE(rep.notes.empty()) << s.str();
  }
}

TEST(Catalog, AuditFlagsComplexSymmetricExponent) {
  const VerificationReport rep = verify_det_formula(spec(Family::kSymmetricC, 2), 5, 3);
  EXPECT_TRUE(rep.pass());
  bool flagged = false;
  for (const auto& n : rep.notes) flagged = flagged || n.find("does not match") != std::string::npos;
  EXPECT_TRUE(flagged);
}

TEST(Catalog, TwistedFamiliesStayJordan) {
  FamilySpec s = spec(Family::kHermitianC, 3);
  s.gamma_signs = {1, -1, 1};
  const JordanAlgebra J = build(s);
  EXPECT_TRUE(check_jordan(J, 4, 3).pass());
  EXPECT_TRUE(verify_det_formula(s, 5, 4).pass());
  const SemisimpleResult r = is_semisimple(J);
  EXPECT_TRUE(r.semisimple);
  EXPECT_GT(r.signature.negative, 0u);
}
