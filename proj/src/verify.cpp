#include "jordanaff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "jordanaff/config.hpp"
#include "jordanaff/numeric.hpp"
#include "residual.hpp"

namespace jordanaff {

using detail::elapsed_since;
using detail::record;

namespace {

Matrix<Rational> transpose(const Matrix<Rational>& m) {
  Matrix<Rational> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

/// G M - (G M)^T.
Matrix<Rational> asymmetry(const Matrix<Rational>& G, const Matrix<Rational>& M) {
  const Matrix<Rational> gm = G * M;
  return gm - transpose(gm);
}

}  // namespace

VerificationReport check_operator_identities(const JordanAlgebra& J, std::size_t samples, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d = J.dim();
  VerificationReport rep;
  rep.target = J.name();
  std::mt19937_64 rng(seed);
  const Matrix<Rational> G = gram(J);
  const Matrix<Rational> I = Matrix<Rational>::identity(d);

  Check sat{"self_adjoint_T", true, 0.0, d + samples, seed, ""};
  Check sap{"self_adjoint_P", true, 0.0, d + samples, seed, ""};
  for (std::size_t i = 0; i < d; ++i) {
    const Vec<Rational> b = basis_vector(d, i);
    record(sat, asymmetry(G, t_operator<Rational>(J, b)), "T_b" + std::to_string(i));
    record(sap, asymmetry(G, p_operator<Rational>(J, b)), "P_b" + std::to_string(i));
  }

  Check fund{"fundamental_identity", true, 0.0, samples, seed, ""};
  Check fdet{"fundamental_det", true, 0.0, samples, seed, ""};
  Check ip{"inverse_P", true, 0.0, 0, seed, ""};
  Check it{"inverse_T", true, 0.0, 0, seed, ""};
  std::size_t singular = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string where = "sample " + std::to_string(s);
    const Vec<Rational> u = random_element(d, rng), v = random_element(d, rng);
    const Matrix<Rational> pu = p_operator<Rational>(J, u), pv = p_operator<Rational>(J, v);
    record(sat, asymmetry(G, t_operator<Rational>(J, u)), where);
    record(sap, asymmetry(G, pu), where);

    const Vec<Rational> puv = pu.apply(v);
    const Matrix<Rational> ppuv = p_operator<Rational>(J, puv);
    const Matrix<Rational> rhs = pu * (pv * pu);
    record(fund, ppuv - rhs, where);
    const Rational du = determinant(pu);
    record(fdet, determinant(ppuv) - du * du * determinant(pv), where);

    // Non-invertible draws are replaced so the inverse laws see every sample.
    Vec<Rational> iv = v, w;
    for (int attempt = 0;; ++attempt) {
      try {
        w = invert(J, iv);
        break;
      } catch (const AlgebraError&) {
        ++singular;
        if (attempt == 20) break;
        iv = random_element(d, rng);
      }
    }
    if (w.empty()) continue;
    ++ip.samples;
    ++it.samples;
    const Matrix<Rational> piv = p_operator<Rational>(J, iv);
    record(ip, p_operator<Rational>(J, w) * piv - I, where);
    const Matrix<Rational> tw = t_operator<Rational>(J, w), tv = t_operator<Rational>(J, iv);
    record(it, tw * piv - tv, where);
    record(it, piv * tw - tv, where);
  }
  if (singular > 0)
    rep.notes.push_back(std::to_string(singular) + " non-invertible draws were replaced in the inverse laws");
  for (auto* c : {&sat, &sap, &fund, &fdet, &ip, &it}) rep.checks.push_back(*c);
  rep.elapsed_ms = elapsed_since(t0);
  return rep;
}

VerificationReport check_k_action(const JordanAlgebra& J, const SymmetricPair& pair, std::size_t samples,
                                  std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d = J.dim();
  VerificationReport rep;
  rep.target = J.name();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  Check act{"k_acts_by_T", true, 0.0, samples, seed, ""};
  Check der{"k_derivation", true, 0.0, samples, seed, ""};
  const auto& ops = pair.k.ops;
  for (std::size_t s = 0; s < samples && !ops.empty(); ++s) {
    const std::string where = "sample " + std::to_string(s);
    SparseOp phi(d);
    for (const auto& op : ops) {
      const int c = coef(rng);
      if (c != 0) phi = phi + Rational(c) * op;
    }
    const Vec<Rational> u = random_element(d, rng), v = random_element(d, rng);
    const Matrix<Rational> P = phi.to_dense();
    const Vec<Rational> pu = phi.apply(u), pv = phi.apply(v);
    record(act, commutator(P, t_operator<Rational>(J, u)) - t_operator<Rational>(J, pu), where);
    Vec<Rational> r = phi.apply(product<Rational>(J, u, v));
    const Vec<Rational> a = product<Rational>(J, pu, v), b = product<Rational>(J, u, pv);
    for (std::size_t i = 0; i < d; ++i) r[i] -= a[i] + b[i];
    record(der, r, where);
  }
  if (ops.empty()) rep.notes.push_back("k = 0; the k-action identities hold vacuously");
  rep.checks.push_back(act);
  rep.checks.push_back(der);
  rep.elapsed_ms = elapsed_since(t0);
  return rep;
}

TangentOrder tangent_order(const JordanAlgebra& J, std::uint64_t seed, const std::vector<double>& h) {
  const std::size_t d = J.dim();
  const std::vector<Vec<Rational>> v0 = trace_free_basis(J);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  Vec<double> x(d, 0.0);
  // Redraw until X != 0; with dim V0 = 1 the zero combination is common.
  while (!v0.empty() && std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) {
    for (const auto& b : v0) {
      const double c = coef(rng);
      for (std::size_t i = 0; i < d; ++i) x[i] += c * b[i].to_double();
    }
  }
  const Vec<double> e = to_double<Rational>(J.require_unity());
  const Matrix<double> tx = t_operator<double>(J, x);
  TangentOrder out;
  out.h = h;
  for (double hh : h) {
    Vec<double> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = e[i] + hh * x[i];
    const Matrix<double> p = p_operator<double>(J, u);
    double err = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const double fd = (p(i, j) - (i == j ? 1.0 : 0.0)) / hh;
        const double diff = fd - 2.0 * tx(i, j);
        err += diff * diff;
      }
    out.error.push_back(std::sqrt(err));
  }
  // Slope of log(error) against log(h).
  const std::size_t m = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double lx = std::log(h[i]), ly = std::log(std::max(out.error[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = static_cast<double>(m) * sxx - sx * sx;
  out.order = den != 0.0 ? (static_cast<double>(m) * sxy - sx * sy) / den : 0.0;
  return out;
}

Check exp_invariance(const HypersurfaceModel& model, std::size_t samples, std::uint64_t seed) {
  const JordanAlgebra& J = model.algebra;
  const std::size_t d = J.dim();
  Check c{"exp_preserves_det", true, 0.0, samples, seed, ""};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec<double> x(d, 0.0);
    for (const auto& b : model.v0_basis) {
      const double a = 0.3 * normal(rng) / std::sqrt(static_cast<double>(std::max<std::size_t>(model.n(), 1)));
      for (std::size_t i = 0; i < d; ++i) x[i] += a * b[i].to_double();
    }
    // u is redrawn while P_u is numerically singular against its Hadamard bound.
    Vec<double> u;
    double before = 0.0;
    for (int attempt = 0; attempt < 50; ++attempt) {
      u = to_double<Rational>(random_element(d, rng));
      const Matrix<double> pu = p_operator<double>(J, u);
      double bound = 1.0;
      for (std::size_t j = 0; j < d; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < d; ++i) col += pu(i, j) * pu(i, j);
        bound *= std::sqrt(col);
      }
      before = determinant(pu);
      if (std::abs(before) > 1e-10 * bound) break;
    }
    const Eigen::MatrixXd g = expm(to_eigen(t_operator<double>(J, x)));
    const Eigen::VectorXd gu = g * Eigen::Map<const Eigen::VectorXd>(u.data(), static_cast<Eigen::Index>(d));
    const Vec<double> w(gu.data(), gu.data() + d);
    const double after = determinant(p_operator<double>(J, w));
    const double rel = std::abs(after - before) / std::max(std::abs(before), 1e-300);
    c.max_residual = std::max(c.max_residual, rel);
    if (rel > kTolerances.level_set) {
      c.pass = false;
      if (c.detail.empty()) c.detail = "sample " + std::to_string(s);
    }
  }
  return c;
}

Check level_set_check(const HypersurfaceModel& model, std::size_t count, std::uint64_t seed) {
  Check c{"level_set", true, 0.0, count, seed, ""};
  const auto pts = sample_points(model, count, seed);
  for (std::size_t s = 0; s < pts.size(); ++s) {
    const double r = std::abs(level_residual(model, pts[s]));
    c.max_residual = std::max(c.max_residual, r);
    if (!(r <= kTolerances.level_set)) {
      c.pass = false;
      if (c.detail.empty()) c.detail = "point " + std::to_string(s);
    }
  }
  return c;
}

Check affine_normal_check(const HypersurfaceModel& model) {
  Check c{"affine_normal", true, 0.0, 1, 0, ""};
  if (model.n() == 0) {
    c.detail = "n = 0: no normal to compare";
    return c;
  }
  Vec<Rational> eta = affine_normal_over_C(model);
  for (std::size_t k = 0; k < eta.size(); ++k) eta[k] += model.L1 * model.e[k];
  record(c, eta, "xi_o / C + L1 e");
  return c;
}

Check trace_form_check(const HypersurfaceModel& model) {
  const JordanAlgebra& J = model.algebra;
  const std::size_t n = model.n();
  Check c{"trace_form", true, 0.0, 1 + n * n, 0, ""};
  const Rational np1(static_cast<std::int64_t>(n + 1));
  record(c, trace_form<Rational>(J, model.e, model.e) - np1, "<e,e>");
  // tr T_{X o Y} directly, not through the Gram matrix the model was built from.
  const Vec<Rational> tau = trace_vector<Rational>(J);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<Rational>& x = model.v0_basis[i];
    record(c, dot<Rational>(tau, product<Rational>(J, x, model.e)), "<X" + std::to_string(i) + ",e>");
    for (std::size_t j = 0; j < n; ++j)
      record(c, dot<Rational>(tau, product<Rational>(J, x, model.v0_basis[j])) + np1 * model.L1 * model.g(i, j),
             "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return c;
}

}  // namespace jordanaff
