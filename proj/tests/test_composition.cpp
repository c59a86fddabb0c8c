#include <gtest/gtest.h>

#include <random>

#include "jordanaff/composition.hpp"
#include "jordanaff/rational.hpp"

using namespace jordanaff;

namespace {

CDScalar<Rational> random_scalar(const CDSignature& sig, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> c(sig.dim());
  for (auto& x : c) x = Rational(d(rng));
  return CDScalar<Rational>(sig, c);
}

const CDSignature kAll[] = {CDSignature::complex(),    CDSignature::quaternion(),       CDSignature::octonion(),
                            CDSignature::split_complex(), CDSignature::split_quaternion(), CDSignature::split_octonion()};

}  // namespace

TEST(CayleyDickson, ImaginaryUnitsSquareToGamma) {
  const auto i = CDScalar<Rational>::unit(CDSignature::complex(), 1);
  EXPECT_EQ(i * i, CDScalar<Rational>::real(CDSignature::complex(), Rational(-1)));
  const auto j = CDScalar<Rational>::unit(CDSignature::split_complex(), 1);
  EXPECT_EQ(j * j, CDScalar<Rational>::real(CDSignature::split_complex(), Rational(1)));
}

TEST(CayleyDickson, NormIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (const auto& sig : kAll)
    for (int s = 0; s < 25; ++s) {
      const auto a = random_scalar(sig, rng), b = random_scalar(sig, rng);
      EXPECT_EQ(cd_norm(a * b), cd_norm(a) * cd_norm(b));
    }
}

TEST(CayleyDickson, OctonionsAreAlternativeNotAssociative) {
  std::mt19937_64 rng(9);
  bool some_nonassociative = false;
  for (const auto& sig : {CDSignature::octonion(), CDSignature::split_octonion()})
    for (int s = 0; s < 25; ++s) {
      const auto a = random_scalar(sig, rng), b = random_scalar(sig, rng), c = random_scalar(sig, rng);
      EXPECT_TRUE(is_zero(associator(a, a, b)));
      EXPECT_TRUE(is_zero(associator(a, b, b)));
      some_nonassociative = some_nonassociative || !is_zero(associator(a, b, c));
    }
  EXPECT_TRUE(some_nonassociative);
}

TEST(CayleyDickson, QuaternionsAreAssociative) {
  std::mt19937_64 rng(13);
  for (const auto& sig : {CDSignature::quaternion(), CDSignature::split_quaternion()})
    for (int s = 0; s < 25; ++s) {
      const auto a = random_scalar(sig, rng), b = random_scalar(sig, rng), c = random_scalar(sig, rng);
      EXPECT_TRUE(is_zero(associator(a, b, c)));
    }
}

TEST(CayleyDickson, ConjugationReversesProducts) {
  std::mt19937_64 rng(17);
  for (const auto& sig : kAll)
    for (int s = 0; s < 10; ++s) {
      const auto a = random_scalar(sig, rng), b = random_scalar(sig, rng);
      EXPECT_EQ(cd_conj(a * b), cd_conj(b) * cd_conj(a));
    }
}

TEST(CayleyDickson, SplitQuaternionsHaveNullElements) {
  // 1 + k style elements: norm x0^2 - gamma-weighted terms can vanish.
  const CDSignature sig = CDSignature::split_quaternion();
  bool found = false;
  for (std::size_t idx = 1; idx < 4 && !found; ++idx) {
    const auto z = CDScalar<Rational>::real(sig, Rational(1)) + CDScalar<Rational>::unit(sig, idx);
    found = cd_norm(z).is_zero();
  }
  EXPECT_TRUE(found);
}
