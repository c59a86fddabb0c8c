#pragma once

// Jordan triple product of a unital algebra, the structure Lie algebra
// L = span{L(u, v)} and the restricted pair g = k + p with p = {T_X : X in V0}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jordanaff/jordan.hpp"
#include "jordanaff/report.hpp"
#include "jordanaff/sparse.hpp"

namespace jordanaff {

/// {u, v, w} = u o (v o w) - v o (u o w) + (u o v) o w.
template <class T>
Vec<T> triple(const JordanAlgebra& J, std::span<const T> u, std::span<const T> v, std::span<const T> w) {
  const Vec<T> vw = product<T>(J, v, w);
  const Vec<T> uw = product<T>(J, u, w);
  const Vec<T> uv = product<T>(J, u, v);
  Vec<T> out = product<T>(J, u, std::span<const T>(vw));
  const Vec<T> b = product<T>(J, v, std::span<const T>(uw));
  const Vec<T> c = product<T>(J, std::span<const T>(uv), w);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i] - b[i];
  return out;
}

/// L(u, v) = [T_u, T_v] + T_{u o v}.
template <class T>
Matrix<T> l_operator(const JordanAlgebra& J, std::span<const T> u, std::span<const T> v) {
  const Matrix<T> tu = t_operator<T>(J, u);
  const Matrix<T> tv = t_operator<T>(J, v);
  const Vec<T> uv = product<T>(J, u, v);
  Matrix<T> l = tu * tv;
  l -= tv * tu;
  l += t_operator<T>(J, std::span<const T>(uv));
  return l;
}

/// (u, v) = tr L(u, v).
Rational triple_form(const JordanAlgebra& J, std::span<const Rational> u, std::span<const Rational> v);

/// Basis of a Lie algebra of operators on T^n.
struct LieBasis {
  std::vector<SparseOp> ops;          // rational mode
  std::vector<Matrix<double>> ops_f;  // float mode
  std::vector<std::string> history;   // "gen[i]" or "[#a,#b]"
  std::size_t ambient_dim{0};         // n^2
  bool closed{false};
  Mode mode{Mode::kRational};

  [[nodiscard]] std::size_t dim() const noexcept { return mode == Mode::kRational ? ops.size() : ops_f.size(); }
};

/// Adjoins brackets of basis pairs until the span stops growing. Rational
/// mode decides membership by exact elimination; float mode by residual
/// norm against 1e-9 of the largest generator norm, certified by a final SVD.
LieBasis bracket_closure(const std::vector<SparseOp>& gens, Mode mode = Mode::kRational);

/// Row-echelon form of span(basis.ops), for membership tests.
SparseEchelon span_echelon(const LieBasis& basis);

struct SymmetricPair {
  LieBasis k;
  std::vector<Vec<Rational>> v0_basis;  // X_1..X_n spanning {tr T_u = 0}
  std::vector<SparseOp> p_ops;          // T_{X_i}
  std::vector<int> theta;               // +1 on k basis, -1 on p basis, in that order
};

/// Basis of V0 = {u : tr T_u = 0}: the nullspace of the trace covector with
/// an identity block on its free columns.
std::vector<Vec<Rational>> trace_free_basis(const JordanAlgebra& J);

/// k = gen{[T_X, T_Y] : X, Y in V0}, p = {T_X}. kNotSemisimple otherwise.
SymmetricPair restricted_pair(const JordanAlgebra& J);

/// k_p_bracket, p_p_bracket, lie_closed, effective, derivation, image_in_v0,
/// skew_symmetric, kills_unity, structure_decomposition.
VerificationReport check_pair(const SymmetricPair& pair, const JordanAlgebra& J, std::uint64_t seed = 11,
                              std::size_t derivation_samples = 4);

/// Triple-system identities on seeded random samples: jt1, jt2, l_sum, l_difference,
/// l_adjoint, triple_form_equals_trace_form, bracket_shift.
VerificationReport check_triple(const JordanAlgebra& J, std::size_t samples, std::uint64_t seed);

}  // namespace jordanaff
