#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "jordanaff/jordan.hpp"
#include "jordanaff/numeric.hpp"

namespace jordanaff {
namespace {

// Polynomials as coefficient lists, lowest degree first, no trailing zeros.
template <class T>
using Poly = std::vector<T>;

template <class T>
bool poly_is_zero(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return std::abs(x) < 1e-13;
  else
    return x.is_zero();
}

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && poly_is_zero(p.back())) p.pop_back();
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

template <class T>
Poly<T> sub(Poly<T> a, const Poly<T>& b) {
  if (a.size() < b.size()) a.resize(b.size(), T(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(Poly<T> a, const Poly<T>& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly<T> q(a.size() - b.size() + 1, T(0));
  for (std::size_t i = a.size() - 1;; --i) {
    const T f = a[i] / b.back();
    q[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= f * b[j];
    a[i] = T(0);
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

/// Inverse of a modulo m (assumed coprime), by extended Euclid.
template <class T>
Poly<T> inverse_mod(const Poly<T>& a, const Poly<T>& m) {
  Poly<T> r0 = m, r1 = divmod(a, m).second;
  Poly<T> s0{}, s1{T(1)};
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly<T> s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw AlgebraError(ErrorKind::kNotSemisimple, "decompose: repeated factor in minimal polynomial");
  const T c = r1[0];
  for (auto& x : s1) x = x / c;
  return divmod(s1, m).second;
}

template <class T>
Vec<T> to_t(const Vec<Rational>& v) {
  if constexpr (std::is_same_v<T, double>) {
    Vec<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
    return out;
  } else {
    return v;
  }
}

/// Monic minimal polynomial of z acting on the unity by powers: smallest k with
/// z^k in span(e, z, ..., z^{k-1}). Also returns the powers.
struct MinPoly {
  Poly<Rational> poly;
  std::vector<Vec<Rational>> powers;
};

MinPoly minimal_polynomial(const JordanAlgebra& J, const Vec<Rational>& z, std::size_t max_degree) {
  const std::size_t d = J.dim();
  MinPoly out;
  out.powers.push_back(J.require_unity());
  for (std::size_t k = 1; k <= max_degree + 1; ++k) {
    Vec<Rational> next = product<Rational>(J, out.powers.back(), z);
    Matrix<Rational> a(d, out.powers.size());
    for (std::size_t c = 0; c < out.powers.size(); ++c) a.set_col(c, out.powers[c]);
    if (auto x = solve(a, std::span<const Rational>(next))) {
      out.poly.assign(x->size() + 1, Rational(0));
      for (std::size_t i = 0; i < x->size(); ++i) out.poly[i] = -(*x)[i];
      out.poly.back() = Rational(1);
      return out;
    }
    out.powers.push_back(std::move(next));
  }
  throw AlgebraError(ErrorKind::kNotSemisimple, "decompose: minimal polynomial degree exceeds center dimension");
}

std::vector<std::complex<double>> roots(const Poly<Rational>& p) {
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) comp(i, n - 1) = -p[i].to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<std::complex<double>> r;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r.push_back(es.eigenvalues()(i));
  return r;
}

/// Splits p into real-irreducible factors (linear or quadratic) from its float
/// roots. `exact` requests rational coefficients verified by exact division.
template <class T>
std::optional<std::vector<Poly<T>>> factor(const Poly<Rational>& p) {
  const auto rs = roots(p);
  double scale = 1.0;
  for (const auto& r : rs) scale = std::max(scale, std::abs(r));
  std::vector<Poly<T>> factors;
  std::vector<bool> used(rs.size(), false);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(rs[i].imag()) < 1e-7 * scale) {
      if constexpr (std::is_same_v<T, double>)
        factors.push_back({-rs[i].real(), 1.0});
      else
        factors.push_back({-rationalize(rs[i].real()), Rational(1)});
      continue;
    }
    std::size_t partner = rs.size();
    for (std::size_t j = i + 1; j < rs.size(); ++j)
      if (!used[j] && std::abs(rs[j] - std::conj(rs[i])) < 1e-7 * scale) {
        partner = j;
        break;
      }
    if (partner == rs.size()) return std::nullopt;
    used[partner] = true;
    const double s = 2.0 * rs[i].real();
    const double q = std::norm(rs[i]);
    if constexpr (std::is_same_v<T, double>)
      factors.push_back({q, -s, 1.0});
    else
      factors.push_back({rationalize(q), -rationalize(s), Rational(1)});
  }
  if constexpr (!std::is_same_v<T, double>) {
    Poly<Rational> rest = p;
    for (const auto& f : factors) {
      auto [q, r] = divmod(rest, f);
      if (!r.empty()) return std::nullopt;
      rest = std::move(q);
    }
    if (rest.size() != 1) return std::nullopt;
  }
  return factors;
}

template <class T>
Vec<T> evaluate(const JordanAlgebra& J, const Poly<T>& q, const std::vector<Vec<Rational>>& powers) {
  Vec<T> out(J.dim(), T(0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    const Vec<T> zk = to_t<T>(powers[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += q[k] * zk[i];
  }
  return out;
}

/// Central idempotents e_j = q_j(z), q_j = 1 mod f_j and 0 mod f_i (i != j).
template <class T>
std::vector<Vec<T>> idempotents(const JordanAlgebra& J, const Poly<Rational>& p, const std::vector<Poly<T>>& fs,
                                const std::vector<Vec<Rational>>& powers) {
  Poly<T> pt;
  for (const auto& x : p) {
    if constexpr (std::is_same_v<T, double>)
      pt.push_back(x.to_double());
    else
      pt.push_back(x);
  }
  std::vector<Vec<T>> out;
  for (const auto& f : fs) {
    Poly<T> cof = divmod(pt, f).first;
    Poly<T> s = inverse_mod(cof, f);
    Poly<T> q = divmod(mul(cof, s), pt).second;
    out.push_back(evaluate<T>(J, q, powers));
  }
  return out;
}

std::vector<Vec<Rational>> column_space_basis(const Matrix<Rational>& m) {
  // Row space of m^T in reduced echelon form: clean bases for block sums.
  Echelon<Rational> e = rref(m.transpose());
  std::vector<Vec<Rational>> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const auto row = e.reduced.row(r);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

Ideal exact_ideal(const JordanAlgebra& J, const Vec<Rational>& idem, std::size_t index) {
  const Matrix<Rational> t = t_operator<Rational>(J, idem);
  Ideal I;
  I.basis = column_space_basis(t);
  I.algebra = restrict_to_subspace(J, I.basis, J.name() + "_ideal" + std::to_string(index));
  I.idempotent = idem;
  I.exact = true;
  return I;
}

Ideal float_ideal(const JordanAlgebra& J, const Vec<double>& idem, std::size_t index) {
  const std::size_t d = J.dim();
  const Eigen::MatrixXd t = to_eigen(t_operator<double>(J, std::span<const double>(idem)));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeFullU);
  const std::size_t r = svd_rank(t, 1e-9);
  const Eigen::MatrixXd u = svd.matrixU().leftCols(static_cast<Eigen::Index>(r));
  Ideal I;
  I.exact = false;
  for (std::size_t c = 0; c < r; ++c) {
    Vec<Rational> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rationalize(u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)), 1000000000);
    I.basis.push_back(std::move(v));
  }
  I.idempotent.resize(d);
  for (std::size_t i = 0; i < d; ++i) I.idempotent[i] = rationalize(idem[i], 1000000000);
  // Structure constants by least squares in the orthonormal basis u.
  std::vector<Vec<Vec<Rational>>> prod(r, Vec<Vec<Rational>>(r, Vec<Rational>(r)));
  std::vector<Vec<double>> cols(r, Vec<double>(d));
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < d; ++i) cols[c][i] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vec<double> p = product<double>(J, cols[a], cols[b]);
      Eigen::VectorXd pv(d);
      for (std::size_t i = 0; i < d; ++i) pv(static_cast<Eigen::Index>(i)) = p[i];
      const Eigen::VectorXd coeff = u.transpose() * pv;
      for (std::size_t k = 0; k < r; ++k) prod[a][b][k] = rationalize(coeff(static_cast<Eigen::Index>(k)), 1000000000);
    }
  I.algebra = JordanAlgebra(J.name() + "_ideal" + std::to_string(index), std::move(prod), std::nullopt, Mode::kFloat);
  Eigen::VectorXd ev(d);
  for (std::size_t i = 0; i < d; ++i) ev(static_cast<Eigen::Index>(i)) = idem[i];
  const Eigen::VectorXd ec = u.transpose() * ev;
  Vec<Rational> e(r);
  for (std::size_t k = 0; k < r; ++k) e[k] = rationalize(ec(static_cast<Eigen::Index>(k)), 1000000000);
  I.algebra.set_unity(std::move(e));
  return I;
}

}  // namespace

std::vector<Ideal> decompose(const JordanAlgebra& J, std::uint64_t seed) {
  if (!is_semisimple(J).semisimple)
    throw AlgebraError(ErrorKind::kNotSemisimple, "decompose: trace form of '" + J.name() + "' is degenerate");
  J.require_unity();
  const std::vector<Vec<Rational>> zc = center(J);
  const std::size_t cdim = zc.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);

  std::optional<MinPoly> mp_float;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec<Rational> z = zero_vector(J.dim());
    for (const auto& b : zc) z = z + scale(b, Rational(coef(rng)));
    MinPoly mp = minimal_polynomial(J, z, cdim);
    if (mp.poly.size() - 1 != cdim) continue;  // not generic enough
    if (auto fs = factor<Rational>(mp.poly)) {
      const auto ids = idempotents<Rational>(J, mp.poly, *fs, mp.powers);
      std::vector<Ideal> out;
      for (std::size_t j = 0; j < ids.size(); ++j) out.push_back(exact_ideal(J, ids[j], j));
      return out;
    }
    if (!mp_float) mp_float = std::move(mp);
  }
  if (!mp_float) throw AlgebraError(ErrorKind::kNotSemisimple, "decompose: no generic central element found");
  auto fs = factor<double>(mp_float->poly);
  if (!fs) throw AlgebraError(ErrorKind::kNotSemisimple, "decompose: unpaired complex root");
  const auto ids = idempotents<double>(J, mp_float->poly, *fs, mp_float->powers);
  std::vector<Ideal> out;
  for (std::size_t j = 0; j < ids.size(); ++j) out.push_back(float_ideal(J, ids[j], j));
  return out;
}

}  // namespace jordanaff
