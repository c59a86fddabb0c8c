#include <gtest/gtest.h>

#include <random>

#include "jordanaff/calabi.hpp"
#include "jordanaff/catalog.hpp"
#include "jordanaff/jordan.hpp"

using namespace jordanaff;

namespace {

using Products = std::vector<Vec<Vec<Rational>>>;

Vec<Rational> v2(int a, int b) { return {Rational(a), Rational(b)}; }

/// a o a = b, a o b = a, b o b = 0: commutative but (a^2 a) a != a^2 (a a).
JordanAlgebra non_jordan() {
  Products p = {{v2(0, 1), v2(1, 0)}, {v2(1, 0), v2(0, 0)}};
  return JordanAlgebra("non_jordan", p);
}

/// R[eps]/(eps^2): Jordan, unital, degenerate trace form.
JordanAlgebra dual_numbers() {
  Products p = {{v2(1, 0), v2(0, 1)}, {v2(0, 1), v2(0, 0)}};
  return JordanAlgebra("dual_numbers", p, v2(1, 0));
}

FamilySpec spec(Family f, std::size_t m = 0) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  return s;
}

}  // namespace

TEST(Jordan, DetectsNonJordanProduct) {
  const VerificationReport rep = check_jordan(non_jordan(), 1, 5);
  EXPECT_FALSE(rep.pass());
}

TEST(Jordan, DualNumbersAreJordanButNotSemisimple) {
  const JordanAlgebra J = dual_numbers();
  EXPECT_TRUE(check_jordan(J, 1, 5).pass());
  const SemisimpleResult s = is_semisimple(J);
  EXPECT_FALSE(s.semisimple);
  EXPECT_TRUE(s.gram_det.is_zero());
  EXPECT_EQ(s.signature.zero, 1u);
}

TEST(Jordan, FindsUnity) {
  const auto e = find_unity(dual_numbers());
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(*e, v2(1, 0));
  EXPECT_FALSE(find_unity(non_jordan()).has_value());
}

TEST(Jordan, GramOfRealsIsOne) {
  const JordanAlgebra R = build(spec(Family::kReals));
  EXPECT_EQ(gram(R)(0, 0), Rational(1));
}

TEST(Jordan, InverseMatchesMatrixInverse) {
  // In M_2(R) with X o Y = (XY + YX)/2 the Jordan inverse is the matrix inverse.
  const FamilySpec s = spec(Family::kFullMatrixR, 2);
  const JordanAlgebra J = build(s);
  const MatrixModel mm = *matrix_model(s);
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const Vec<Rational> u = random_element(J.dim(), rng);
    const Vec<Rational> U = realize(mm, u);
    const Rational det = U[0] * U[3] - U[1] * U[2];
    if (det.is_zero()) {
      EXPECT_THROW(invert(J, u), AlgebraError);
      continue;
    }
    const Vec<Rational> W = realize(mm, invert(J, u));
    EXPECT_EQ(W[0], U[3] / det);
    EXPECT_EQ(W[1], -U[1] / det);
    EXPECT_EQ(W[2], -U[2] / det);
    EXPECT_EQ(W[3], U[0] / det);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Jordan, PowerAssociativeOnRandomElements) {
  const JordanAlgebra J = build(spec(Family::kHermitianH, 2));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const Vec<Rational> u = random_element(J.dim(), rng);
    const Vec<Rational> u2 = product<Rational>(J, u, u);
    EXPECT_EQ(product<Rational>(J, u2, u2), product<Rational>(J, u, product<Rational>(J, u, u2)));
  }
}

TEST(Jordan, IsotopeIsJordanWithInverseUnity) {
  const JordanAlgebra J = build(spec(Family::kSymmetricR, 3));
  std::mt19937_64 rng(8);
  Vec<Rational> g;
  do g = random_element(J.dim(), rng);
  while (is_zero(determinant(p_operator<Rational>(J, g))));
  const JordanAlgebra I = isotope(J, g);
  EXPECT_TRUE(check_jordan(I, 2, 5).pass());
  ASSERT_TRUE(I.unity().has_value());
  EXPECT_EQ(*I.unity(), invert(J, g));
}

TEST(Jordan, DecomposeSplitsDirectSums) {
  const JordanAlgebra A = build(spec(Family::kSymmetricR, 2));
  const JordanAlgebra B = build(spec(Family::kComplexField));
  const JordanAlgebra S = direct_sum({A, B});
  const auto ideals = decompose(S);
  ASSERT_EQ(ideals.size(), 2u);
  EXPECT_EQ(ideals[0].algebra.dim() + ideals[1].algebra.dim(), 5u);
  EXPECT_EQ(decompose(A).size(), 1u);
  // C is commutative and associative, so it is its own center.
  EXPECT_EQ(center(S).size(), 3u);
  EXPECT_EQ(center(A).size(), 1u);
}

TEST(Jordan, ChangeOfBasisPreservesAxioms) {
  const JordanAlgebra J = build(spec(Family::kHermitianC, 2));
  std::vector<Vec<Rational>> basis;
  for (std::size_t i = 0; i < J.dim(); ++i) {
    Vec<Rational> b = basis_vector(J.dim(), i);
    if (i + 1 < J.dim()) b[i + 1] = Rational(2);
    basis.push_back(b);
  }
  const JordanAlgebra K = change_basis(J, basis);
  EXPECT_TRUE(check_jordan(K, 3, 5).pass());
  EXPECT_EQ(is_semisimple(K).signature, is_semisimple(J).signature);
}
