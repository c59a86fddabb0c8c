#pragma once

// Equiaffine symmetric hypersurface attached to a semi-simple algebra and an
// affine mean curvature L1 != 0. Invariants at the origin o = C e:
//
//   g_o(X, Y)    = -<X, Y> / ((n + 1) L1)
//   A_o(X, Y)    = X o Y - tr(T_{X o Y}) / (n + 1) e
//   A_o(X, Y, Z) = g_o(A_o(X, Y), Z)
//
// for X, Y, Z in V0 = {tr T_u = 0}, n = dim V0.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jordanaff/jordan.hpp"
#include "jordanaff/report.hpp"
#include "jordanaff/triple.hpp"

namespace jordanaff {

/// -sgn(L1) sqrt(n+1) ((n+1)|L1|)^{-(n+2)/2}.
double scale_constant(std::size_t n, double L1);

struct ModelOptions {
  bool compute_pair{true};
  bool check_gauss{true};
};

struct HypersurfaceModel {
  JordanAlgebra algebra;
  std::string family;
  Rational L1;
  double C{0.0};
  Vec<Rational> e;
  std::vector<Vec<Rational>> v0_basis;   // in algebra coordinates
  std::vector<std::size_t> v0_free;      // coordinate of X_i is the entry at v0_free[i]
  Matrix<Rational> g;                    // n x n
  std::vector<std::vector<Vec<Rational>>> A_vec;  // A_o(X_i, X_j) in V0 coordinates
  std::vector<Rational> A;               // A_o(X_i, X_j, X_k) at (i n + j) n + k
  std::optional<SymmetricPair> pair;
  bool symmetric_ok{false};
  bool apolarity_ok{false};
  std::optional<bool> gauss_ok;

  [[nodiscard]] std::size_t n() const noexcept { return v0_basis.size(); }
  [[nodiscard]] const Rational& A_at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t m = n();
    return A[(i * m + j) * m + k];
  }
  /// V0 coordinates of an element of V0 (no membership check).
  [[nodiscard]] Vec<Rational> v0_coords(std::span<const Rational> x) const;
  /// Algebra coordinates of sum_i c_i X_i.
  [[nodiscard]] Vec<Rational> from_v0(std::span<const Rational> c) const;
};

/// kNotSemisimple for a degenerate trace form, kInvalidArgument for L1 = 0.
HypersurfaceModel build_model(const JordanAlgebra& J, const Rational& L1, ModelOptions opts = {});

/// R(X, Y) = -[T_X, T_Y] on V0, as an n x n matrix in V0 coordinates.
/// X and Y are algebra coordinates; kNotInSubspace if either is outside V0.
Matrix<Rational> curvature(const HypersurfaceModel& model, std::span<const Rational> X, std::span<const Rational> Y);

/// R(X,Y)Z - L1 (g(Y,Z) X - g(X,Z) Y) + [A_X, A_Y] Z, algebra coordinates.
Vec<Rational> gauss_residual(const HypersurfaceModel& model, std::span<const Rational> X, std::span<const Rational> Y,
                             std::span<const Rational> Z);

/// Gauss residual over all basis triples (i < j; the residual is skew in X, Y
/// and vanishes identically for X = Y), via sparse operators.
Check gauss_check(const HypersurfaceModel& model);

/// Total symmetry of A_o over all index permutations, and tr A_o(X_i) = 0.
Check symmetry_check(const HypersurfaceModel& model);
Check apolarity_check(const HypersurfaceModel& model);

/// xi_o / C computed exactly from (1/n) sum g^{ij} [A_o(X_i,X_j) + <X_i,X_j>/(n+1) e].
Vec<Rational> affine_normal_over_C(const HypersurfaceModel& model);
/// xi_o in algebra coordinates; should equal -L1 C e.
Vec<double> affine_normal(const HypersurfaceModel& model);

struct SampleOptions {
  std::size_t steps{5};
  double step_size{0.3};
};

/// C exp(T_{X_1}) ... exp(T_{X_k}) e with seeded random X_i in V0. Explores the
/// connected orbit component through C e only.
std::vector<Vec<double>> sample_points(const HypersurfaceModel& model, std::size_t count, std::uint64_t seed,
                                       SampleOptions opts = {});

/// det P_p / C^{2(n+1)} - 1, evaluated as det P_{p / C} - 1.
double level_residual(const HypersurfaceModel& model, std::span<const double> p);

struct Reconstruction {
  JordanAlgebra algebra;  // basis X_1..X_n, e (unity last)
  bool jordan{false};
  bool semisimple{false};
  VerificationReport report;
};

/// Algebra on V0 + R e with X o Y = A(X, Y) - L1 g(X, Y) e and unity e, where
/// A(X, Y) is raised from the cubic form with g^{-1}. Rejects asymmetric g or A,
/// a degenerate g, an apolarity violation, and L1 = 0. A product that fails the
/// Jordan or semi-simplicity checks is returned flagged, not thrown.
Reconstruction reconstruct_algebra(std::size_t n, const Matrix<Rational>& g, const std::vector<Rational>& A,
                                   const Rational& L1);

/// The model's (g_o, A_o) fed back through reconstruct_algebra, compared with
/// the input algebra in both bases. Exact.
Check roundtrip_check(const HypersurfaceModel& model);

}  // namespace jordanaff
