#include "jordanaff/hypersurface.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "jordanaff/config.hpp"
#include "residual.hpp"
#include "jordanaff/numeric.hpp"

namespace jordanaff {

namespace {

using detail::elapsed_since;
using detail::record;

void require_v0(const Vec<Rational>& tau, std::span<const Rational> x, const char* what) {
  if (!dot<Rational>(tau, x).is_zero())
    throw AlgebraError(ErrorKind::kNotInSubspace, std::string(what) + " is not trace-free");
}

std::size_t trace_pivot(const Vec<Rational>& tau) {
  std::size_t p = 0;
  while (p < tau.size() && tau[p].is_zero()) ++p;
  return p;
}

}  // namespace

double scale_constant(std::size_t n, double L1) {
  if (L1 == 0.0) throw AlgebraError(ErrorKind::kInvalidArgument, "scale constant needs L1 != 0");
  const double np1 = static_cast<double>(n + 1);
  const double sgn = L1 > 0 ? 1.0 : -1.0;
  return -sgn * std::sqrt(np1) * std::pow(np1 * std::abs(L1), -(static_cast<double>(n) + 2.0) / 2.0);
}

Vec<Rational> HypersurfaceModel::v0_coords(std::span<const Rational> x) const {
  Vec<Rational> c(v0_free.size());
  for (std::size_t i = 0; i < v0_free.size(); ++i) c[i] = x[v0_free[i]];
  return c;
}

Vec<Rational> HypersurfaceModel::from_v0(std::span<const Rational> c) const {
  Vec<Rational> x(algebra.dim(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!v0_basis[i][k].is_zero()) x[k] += c[i] * v0_basis[i][k];
  }
  return x;
}

HypersurfaceModel build_model(const JordanAlgebra& J, const Rational& L1, ModelOptions opts) {
  if (L1.is_zero()) throw AlgebraError(ErrorKind::kInvalidArgument, "affine mean curvature L1 must be nonzero");
  if (!is_semisimple(J).semisimple)
    throw AlgebraError(ErrorKind::kNotSemisimple, J.name() + ": degenerate trace form");
  HypersurfaceModel m;
  m.algebra = J;
  m.family = J.family();
  m.L1 = L1;
  m.e = J.require_unity();
  const std::size_t d = J.dim();
  const std::size_t n = d - 1;
  m.C = scale_constant(n, L1.to_double());
  m.v0_basis = trace_free_basis(J);
  const Vec<Rational> tau = trace_vector<Rational>(J);
  const std::size_t p = trace_pivot(tau);
  for (std::size_t j = 0; j < d; ++j)
    if (j != p) m.v0_free.push_back(j);

  const Matrix<Rational> G = gram(J);
  std::vector<Vec<Rational>> gx;  // G X_i
  for (const auto& x : m.v0_basis) gx.push_back(G.apply(x));
  const Rational scale = Rational(-1) / (Rational(static_cast<std::int64_t>(n + 1)) * L1);
  m.g = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.g(i, j) = scale * dot<Rational>(gx[i], m.v0_basis[j]);

  const Rational inv_np1 = Rational(1) / Rational(static_cast<std::int64_t>(n + 1));
  m.A_vec.assign(n, std::vector<Vec<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<Rational> w = product<Rational>(J, m.v0_basis[i], m.v0_basis[j]);
      const Rational t = dot<Rational>(tau, w) * inv_np1;
      for (std::size_t k = 0; k < d; ++k) w[k] -= t * m.e[k];
      m.A_vec[i][j] = m.v0_coords(w);
      m.A_vec[j][i] = m.A_vec[i][j];
    }
  m.A.assign(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l)
          if (!m.A_vec[i][j][l].is_zero() && !m.g(l, k).is_zero()) s += m.A_vec[i][j][l] * m.g(l, k);
        m.A[(i * n + j) * n + k] = std::move(s);
      }
  m.symmetric_ok = symmetry_check(m).pass;
  m.apolarity_ok = apolarity_check(m).pass;
  if (opts.compute_pair) m.pair = restricted_pair(J);
  if (opts.check_gauss) m.gauss_ok = gauss_check(m).pass;
  return m;
}

Matrix<Rational> curvature(const HypersurfaceModel& model, std::span<const Rational> X, std::span<const Rational> Y) {
  const JordanAlgebra& J = model.algebra;
  const Vec<Rational> tau = trace_vector<Rational>(J);
  require_v0(tau, X, "curvature: X");
  require_v0(tau, Y, "curvature: Y");
  Matrix<Rational> M = commutator(t_operator<Rational>(J, X), t_operator<Rational>(J, Y));
  const std::size_t n = model.n();
  Matrix<Rational> R(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec<Rational> col = M.apply(model.v0_basis[j]);
    const Vec<Rational> c = model.v0_coords(col);
    for (std::size_t i = 0; i < n; ++i) R(i, j) = -c[i];
  }
  return R;
}

Vec<Rational> gauss_residual(const HypersurfaceModel& model, std::span<const Rational> X, std::span<const Rational> Y,
                             std::span<const Rational> Z) {
  const JordanAlgebra& J = model.algebra;
  const std::size_t d = J.dim();
  const Vec<Rational> tau = trace_vector<Rational>(J);
  require_v0(tau, X, "gauss_residual: X");
  require_v0(tau, Y, "gauss_residual: Y");
  require_v0(tau, Z, "gauss_residual: Z");
  const Rational np1(static_cast<std::int64_t>(d));
  auto g = [&](std::span<const Rational> a, std::span<const Rational> b) {
    return -trace_form<Rational>(J, a, b) / (np1 * model.L1);
  };
  auto A = [&](std::span<const Rational> a, std::span<const Rational> w) {
    Vec<Rational> r = product<Rational>(J, a, w);
    const Rational t = dot<Rational>(tau, r) / np1;
    for (std::size_t k = 0; k < d; ++k) r[k] -= t * model.e[k];
    return r;
  };
  const Vec<Rational> yz = product<Rational>(J, Y, Z);
  const Vec<Rational> xz = product<Rational>(J, X, Z);
  const Vec<Rational> x_yz = product<Rational>(J, X, std::span<const Rational>(yz));
  const Vec<Rational> y_xz = product<Rational>(J, Y, std::span<const Rational>(xz));
  const Rational gyz = g(Y, Z), gxz = g(X, Z);
  const Vec<Rational> ayz = A(Y, Z), axz = A(X, Z);
  const Vec<Rational> axayz = A(X, ayz), ayaxz = A(Y, axz);
  Vec<Rational> r(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    const Rational curv = y_xz[k] - x_yz[k];
    r[k] = curv - model.L1 * (gyz * X[k] - gxz * Y[k]) + axayz[k] - ayaxz[k];
  }
  return r;
}

Check gauss_check(const HypersurfaceModel& model) {
  const JordanAlgebra& J = model.algebra;
  const std::size_t d = J.dim(), n = model.n();
  Check c{"gauss", true, 0.0, n * n * n, 0, ""};
  if (n < 2) return c;
  const Vec<Rational> tau = trace_vector<Rational>(J);
  const Rational inv_np1 = Rational(1) / Rational(static_cast<std::int64_t>(d));
  std::vector<SparseOp> T, A;
  for (const auto& x : model.v0_basis) {
    Matrix<Rational> t = t_operator<Rational>(J, x);
    T.push_back(SparseOp::from_dense(t));
    // A_X = T_X - e tau^T T_X / (n+1).
    Vec<Rational> row(d, Rational(0));
    for (std::size_t r = 0; r < d; ++r)
      if (!tau[r].is_zero())
        for (std::size_t k = 0; k < d; ++k) row[k] += tau[r] * t(r, k);
    for (std::size_t r = 0; r < d; ++r)
      if (!model.e[r].is_zero())
        for (std::size_t k = 0; k < d; ++k) t(r, k) -= model.e[r] * row[k] * inv_np1;
    A.push_back(SparseOp::from_dense(t));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // R(X_i, X_j) + [A_i, A_j], with R = -[T_i, T_j].
      const SparseOp M = bracket(A[i], A[j]) - bracket(T[i], T[j]);
      for (std::size_t k = 0; k < n; ++k) {
        Vec<Rational> r = M.apply(model.v0_basis[k]);
        const Rational& gjk = model.g(j, k);
        const Rational& gik = model.g(i, k);
        for (std::size_t q = 0; q < d; ++q) {
          const Rational lin = gjk * model.v0_basis[i][q] - gik * model.v0_basis[j][q];
          if (!lin.is_zero()) r[q] -= model.L1 * lin;
        }
        record(c, r, "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  return c;
}

Check symmetry_check(const HypersurfaceModel& model) {
  const std::size_t n = model.n();
  Check c{"fubini_pick_symmetric", true, 0.0, n * n * n, 0, ""};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational diffs[2] = {model.A_at(i, j, k) - model.A_at(j, i, k), model.A_at(i, j, k) - model.A_at(i, k, j)};
        record(c, diffs, "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return c;
}

Check apolarity_check(const HypersurfaceModel& model) {
  const std::size_t n = model.n();
  Check c{"apolarity", true, 0.0, n, 0, ""};
  for (std::size_t i = 0; i < n; ++i) {
    Rational t(0);
    for (std::size_t j = 0; j < n; ++j) t += model.A_vec[i][j][j];
    record(c, std::span<const Rational>(&t, 1), "X_" + std::to_string(i));
  }
  return c;
}

Vec<Rational> affine_normal_over_C(const HypersurfaceModel& model) {
  const std::size_t n = model.n();
  if (n == 0) throw AlgebraError(ErrorKind::kInvalidArgument, "affine normal needs n >= 1");
  const JordanAlgebra& J = model.algebra;
  const std::size_t d = J.dim();
  const auto ginv = inverse(model.g);
  if (!ginv) throw AlgebraError(ErrorKind::kNotInvertible, "affine metric is degenerate");
  const Rational np1(static_cast<std::int64_t>(d));
  Vec<Rational> xi(d, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& h = (*ginv)(i, j);
      if (h.is_zero()) continue;
      const Vec<Rational> a = model.from_v0(model.A_vec[i][j]);
      const Rational ip = trace_form<Rational>(J, model.v0_basis[i], model.v0_basis[j]) / np1;
      for (std::size_t k = 0; k < d; ++k) xi[k] += h * (a[k] + ip * model.e[k]);
    }
  const Rational inv_n = Rational(1) / Rational(static_cast<std::int64_t>(n));
  for (auto& x : xi) x *= inv_n;
  return xi;
}

Vec<double> affine_normal(const HypersurfaceModel& model) {
  Vec<double> xi = to_double<Rational>(affine_normal_over_C(model));
  for (auto& x : xi) x *= model.C;
  return xi;
}

std::vector<Vec<double>> sample_points(const HypersurfaceModel& model, std::size_t count, std::uint64_t seed,
                                       SampleOptions opts) {
  const JordanAlgebra& J = model.algebra;
  const auto d = static_cast<Eigen::Index>(J.dim());
  const std::size_t n = model.n();
  std::vector<Eigen::MatrixXd> T;
  std::vector<Eigen::VectorXd> X;
  for (const auto& x : model.v0_basis) {
    T.push_back(to_eigen(to_double(t_operator<Rational>(J, x))));
    X.push_back(Eigen::Map<const Eigen::VectorXd>(to_double<Rational>(x).data(), d));
  }
  Eigen::VectorXd e(d);
  for (Eigen::Index k = 0; k < d; ++k) e(k) = model.e[static_cast<std::size_t>(k)].to_double();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::vector<Vec<double>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Eigen::VectorXd v = e;
    for (std::size_t step = 0; step < opts.steps && n > 0; ++step) {
      std::vector<double> c(n);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = normal(rng);
        x += c[i] * X[i];
      }
      const double norm = x.norm();
      if (norm == 0.0) continue;
      const double f = opts.step_size * radius(rng) / norm;
      Eigen::MatrixXd tx = Eigen::MatrixXd::Zero(d, d);
      for (std::size_t i = 0; i < n; ++i) tx += (f * c[i]) * T[i];
      v = expm(tx) * v;
    }
    Vec<double> p(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) p[static_cast<std::size_t>(k)] = model.C * v(k);
    out.push_back(std::move(p));
  }
  return out;
}

double level_residual(const HypersurfaceModel& model, std::span<const double> p) {
  const JordanAlgebra& J = model.algebra;
  Vec<double> q(p.begin(), p.end());
  for (auto& x : q) x /= model.C;
  return determinant(p_operator<double>(J, q)) - 1.0;
}

Reconstruction reconstruct_algebra(std::size_t n, const Matrix<Rational>& g, const std::vector<Rational>& A,
                                   const Rational& L1) {
  if (L1.is_zero())
    throw AlgebraError(ErrorKind::kInvalidArgument, "L1 = 0 gives a degenerate algebra; reconstruction needs L1 != 0");
  if (g.rows() != n || g.cols() != n)
    throw AlgebraError(ErrorKind::kDimensionMismatch, "g must be " + std::to_string(n) + " x " + std::to_string(n));
  if (A.size() != n * n * n)
    throw AlgebraError(ErrorKind::kDimensionMismatch, "A must have " + std::to_string(n * n * n) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != g(j, i))
        throw AlgebraError(ErrorKind::kInvalidArgument,
                           "g is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return A[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (at(i, j, k) != at(j, i, k) || at(i, j, k) != at(i, k, j))
          throw AlgebraError(ErrorKind::kInvalidArgument, "A is not totally symmetric at (" + std::to_string(i) + "," +
                                                              std::to_string(j) + "," + std::to_string(k) + ")");
  const auto ginv = inverse(g);
  if (!ginv) throw AlgebraError(ErrorKind::kNotInvertible, "g is degenerate");

  // A(X_i, X_j)^k = sum_l g^{kl} A_{ijl}.
  std::vector<std::vector<Vec<Rational>>> up(n, std::vector<Vec<Rational>>(n, Vec<Rational>(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        const Rational& a = at(i, j, l);
        if (a.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!(*ginv)(k, l).is_zero()) up[i][j][k] += (*ginv)(k, l) * a;
      }
      up[j][i] = up[i][j];
    }
  for (std::size_t i = 0; i < n; ++i) {
    Rational t(0);
    for (std::size_t j = 0; j < n; ++j) t += up[i][j][j];
    if (!t.is_zero())
      throw AlgebraError(ErrorKind::kInvalidArgument,
                         "apolarity violated: tr A_X" + std::to_string(i) + " = " + t.str());
  }

  const std::size_t d = n + 1;
  std::vector<Vec<Vec<Rational>>> prod(d, Vec<Vec<Rational>>(d, Vec<Rational>(d, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) prod[i][j][k] = up[i][j][k];
      prod[i][j][n] = -L1 * g(i, j);
    }
  for (std::size_t i = 0; i < d; ++i) {
    prod[i][n][i] = 1;
    prod[n][i][i] = 1;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  labels.emplace_back("e");
  Reconstruction rec;
  rec.algebra = JordanAlgebra("reconstructed", std::move(prod), basis_vector(d, n), Mode::kRational, std::move(labels));
  rec.report = check_jordan(rec.algebra);
  rec.report.target = "reconstructed";
  rec.jordan = rec.report.pass();
  const SemisimpleResult ss = is_semisimple(rec.algebra);
  rec.semisimple = ss.semisimple;
  rec.report.checks.push_back(Check{"semisimple", ss.semisimple, ss.semisimple ? 0.0 : 1.0, 1, 0,
                                    ss.semisimple ? "" : "trace form is degenerate"});
  if (!rec.jordan || !rec.semisimple)
    rec.report.notes.push_back("reconstructed product is not a semi-simple Jordan algebra; returned flagged");
  return rec;
}

Check roundtrip_check(const HypersurfaceModel& model) {
  const JordanAlgebra& J = model.algebra;
  const std::size_t d = J.dim();
  Check c{"roundtrip", true, 0.0, 2, 0, ""};
  const Reconstruction rec = reconstruct_algebra(model.n(), model.g, model.A, model.L1);
  std::vector<Vec<Rational>> basis = model.v0_basis;
  basis.push_back(model.e);
  const JordanAlgebra in_model_basis = change_basis(J, basis);
  if (!(in_model_basis == rec.algebra)) {
    c.pass = false;
    c.max_residual = 1.0;
    c.detail = "reconstructed constants differ from the input in the model basis";
    return c;
  }
  const SubspaceCoords sc(basis);
  std::vector<Vec<Rational>> back;
  for (std::size_t i = 0; i < d; ++i) back.push_back(*sc.coords(basis_vector(d, i)));
  const JordanAlgebra original = change_basis(rec.algebra, back);
  if (!(original == J)) {
    c.pass = false;
    c.max_residual = 1.0;
    c.detail = "reconstructed constants differ from the input in the original basis";
  }
  return c;
}

}  // namespace jordanaff
