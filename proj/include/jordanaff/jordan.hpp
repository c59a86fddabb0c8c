#pragma once

// Finite-dimensional real commutative algebras given by structure constants,
// with the operators, forms and structural tests of a Jordan algebra.
//
// Coordinates are always with respect to the algebra's own basis b_0..b_{d-1};
// the product is b_i o b_j = sum_k c[i][j][k] b_k.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "jordanaff/errors.hpp"
#include "jordanaff/linalg.hpp"
#include "jordanaff/rational.hpp"
#include "jordanaff/report.hpp"

namespace jordanaff {

template <class T>
using Table = std::vector<std::vector<std::pair<std::size_t, T>>>;

class JordanAlgebra {
 public:
  JordanAlgebra() = default;

  /// products[i][j] holds the coordinates of b_i o b_j.
  JordanAlgebra(std::string name, std::vector<Vec<Vec<Rational>>> products,
                std::optional<Vec<Rational>> unity = std::nullopt, Mode mode = Mode::kRational,
                std::vector<std::string> labels = {});

  /// Dense c[i][j][k].
  static JordanAlgebra from_tensor(std::string name, const std::vector<std::vector<Vec<Rational>>>& c,
                                   std::optional<Vec<Rational>> unity = std::nullopt, Mode mode = Mode::kRational,
                                   std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] Mode mode() const noexcept { return mode_; }
  [[nodiscard]] const std::optional<Vec<Rational>>& unity() const noexcept { return unity_; }
  [[nodiscard]] const std::string& family() const noexcept { return family_; }

  /// The unity, or kNotUnital.
  [[nodiscard]] const Vec<Rational>& require_unity() const;

  void set_name(std::string n) { name_ = std::move(n); }
  void set_family(std::string f) { family_ = std::move(f); }
  void set_mode(Mode m) { mode_ = m; }
  void set_unity(std::optional<Vec<Rational>> e);

  [[nodiscard]] Rational c(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero entries of b_i o b_j.
  template <class T>
  [[nodiscard]] const std::vector<std::pair<std::size_t, T>>& table(std::size_t i, std::size_t j) const {
    if constexpr (std::is_same_v<T, double>)
      return table_d_[i * dim_ + j];
    else
      return table_[i * dim_ + j];
  }
  [[nodiscard]] Vec<Rational> basis_product(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::vector<std::vector<Vec<Rational>>> tensor() const;

  /// First (i, j, k) with c[i][j][k] != c[j][i][k].
  [[nodiscard]] std::optional<std::array<std::size_t, 3>> first_asymmetry() const;

  friend bool operator==(const JordanAlgebra& a, const JordanAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void build_tables(const std::vector<Vec<Vec<Rational>>>& products);

  std::string name_;
  std::string family_;
  std::vector<std::string> labels_;
  std::size_t dim_{0};
  Mode mode_{Mode::kRational};
  std::optional<Vec<Rational>> unity_;
  Table<Rational> table_;
  Table<double> table_d_;
};

Vec<Rational> basis_vector(std::size_t dim, std::size_t i);
Vec<Rational> zero_vector(std::size_t dim);

/// Small random rational element: entries a/b with |a| <= bound, b in {1, 2}.
Vec<Rational> random_element(std::size_t dim, std::mt19937_64& rng, int bound = 3);

template <class T>
Vec<T> product(const JordanAlgebra& J, std::span<const T> u, std::span<const T> v) {
  const std::size_t d = J.dim();
  if (u.size() != d || v.size() != d) throw AlgebraError(ErrorKind::kDimensionMismatch, "product: coordinate length");
  Vec<T> out(d, T(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(v[j])) continue;
      const auto& row = J.table<T>(i, j);
      if (row.empty()) continue;
      const T uv = u[i] * v[j];
      for (const auto& [k, x] : row) out[k] += uv * x;
    }
  }
  return out;
}

template <class T>
Vec<T> product(const JordanAlgebra& J, const Vec<T>& u, const Vec<T>& v) {
  return product<T>(J, std::span<const T>(u), std::span<const T>(v));
}

/// T_u, the matrix of v -> u o v.
template <class T>
Matrix<T> t_operator(const JordanAlgebra& J, std::span<const T> u) {
  const std::size_t d = J.dim();
  if (u.size() != d) throw AlgebraError(ErrorKind::kDimensionMismatch, "t_operator: coordinate length");
  Matrix<T> m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, x] : J.table<T>(i, j)) m(k, j) += u[i] * x;
  }
  return m;
}

template <class T>
Matrix<T> t_operator(const JordanAlgebra& J, const Vec<T>& u) {
  return t_operator<T>(J, std::span<const T>(u));
}

/// P_u = 2 T_u^2 - T_{u^2}.
template <class T>
Matrix<T> p_operator(const JordanAlgebra& J, std::span<const T> u) {
  const Matrix<T> t = t_operator<T>(J, u);
  const Vec<T> u2 = product<T>(J, u, u);
  Matrix<T> p = t * t;
  p *= T(2);
  p -= t_operator<T>(J, std::span<const T>(u2));
  return p;
}

template <class T>
Matrix<T> p_operator(const JordanAlgebra& J, const Vec<T>& u) {
  return p_operator<T>(J, std::span<const T>(u));
}

/// tr T_{b_k} for every basis vector; tr T_u is linear in u.
template <class T>
Vec<T> trace_vector(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  Vec<T> tau(d, T(0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [idx, x] : J.table<T>(k, j))
        if (idx == j) tau[k] += x;
  return tau;
}

/// (det P_u, tr T_u).
template <class T>
std::pair<T, T> element_det_trace(const JordanAlgebra& J, std::span<const T> u);

/// <u, v> = tr T_{u o v}.
template <class T>
T trace_form(const JordanAlgebra& J, std::span<const T> u, std::span<const T> v) {
  const Vec<T> uv = product<T>(J, u, v);
  const Vec<T> tau = trace_vector<T>(J);
  return dot<T>(uv, tau);
}

/// G_ij = <b_i, b_j>.
Matrix<Rational> gram(const JordanAlgebra& J);

/// JA1 over all basis pairs; JA2 as [T_u, T_{u^2}] = 0 for u in the basis and
/// `random_samples` seeded random elements (this covers every v at once).
VerificationReport check_jordan(const JordanAlgebra& J, std::uint64_t seed = 1, std::size_t random_samples = 5);

/// Solves T_e = I; nullopt if inconsistent.
std::optional<Vec<Rational>> find_unity(const JordanAlgebra& J);

/// v^{-1} = P_v^{-1} v, verified by v o v^{-1} = e and [T_v, T_{v^{-1}}] = 0.
Vec<Rational> invert(const JordanAlgebra& J, std::span<const Rational> v);

struct SemisimpleResult {
  bool semisimple{false};
  Inertia signature;
  Rational gram_det;
};
SemisimpleResult is_semisimple(const JordanAlgebra& J);

/// v -> T_v injective.
bool is_nondegenerate(const JordanAlgebra& J);

/// Product u o (v o G) + v o (u o G) - (u o v) o G. Unity G^{-1} when G is invertible.
JordanAlgebra isotope(const JordanAlgebra& J, std::span<const Rational> gamma);

/// Basis of {v : [T_v, T_u] = 0 for all u}.
std::vector<Vec<Rational>> center(const JordanAlgebra& J);

/// Coordinates of vectors inside a fixed subspace of T^N.
class SubspaceCoords {
 public:
  explicit SubspaceCoords(std::vector<Vec<Rational>> basis);
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Vec<Rational>>& basis() const noexcept { return basis_; }
  /// Coordinates with respect to the given basis, or nullopt if x is outside the span.
  [[nodiscard]] std::optional<Vec<Rational>> coords(std::span<const Rational> x) const;

 private:
  std::vector<Vec<Rational>> basis_;
  Matrix<Rational> reduced_;
  std::vector<std::size_t> pivots_;
  Matrix<Rational> to_basis_;  // maps reduced-basis coordinates to given-basis coordinates
};

/// Same algebra expressed in the basis whose vectors are `basis` (old coordinates).
JordanAlgebra change_basis(const JordanAlgebra& J, const std::vector<Vec<Rational>>& basis);

/// Subalgebra spanned by `basis`; kNotInSubspace if it is not closed under the product.
JordanAlgebra restrict_to_subspace(const JordanAlgebra& J, const std::vector<Vec<Rational>>& basis,
                                   std::string name = {});

struct Ideal {
  JordanAlgebra algebra;
  std::vector<Vec<Rational>> basis;  // in the coordinates of the parent algebra
  Vec<Rational> idempotent;          // its unity, a central idempotent of the parent
  bool exact{true};                  // false if found by the floating-point fallback
};

/// Simple ideals of a semi-simple algebra, via central idempotents.
std::vector<Ideal> decompose(const JordanAlgebra& J, std::uint64_t seed = 7);

}  // namespace jordanaff
