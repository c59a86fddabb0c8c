#include "jordanaff/triple.hpp"

#include <algorithm>
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

SparseOp t_sparse(const JordanAlgebra& J, std::span<const Rational> u) {
  return SparseOp::from_dense(t_operator<Rational>(J, u));
}

double frob(const Matrix<double>& m) {
  double s = 0;
  for (double x : m.data()) s += x * x;
  return std::sqrt(s);
}

LieBasis closure_float(const std::vector<SparseOp>& gens) {
  LieBasis out;
  out.mode = Mode::kFloat;
  if (gens.empty()) {
    out.closed = true;
    return out;
  }
  const std::size_t n = gens.front().size();
  out.ambient_dim = n * n;
  std::vector<Eigen::VectorXd> q;  // orthonormal basis of the span
  double scale = 0;
  for (const auto& g : gens) scale = std::max(scale, frob(to_double(g.to_dense())));
  const double tol = kTolerances.svd_rank * std::max(scale, 1e-300);
  auto try_add = [&](const Matrix<double>& m, std::string label) {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(m.data().data(), static_cast<Eigen::Index>(m.data().size()));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) v -= b.dot(v) * b;
    const double r = v.norm();
    if (r <= tol) return;
    q.push_back(v / r);
    out.ops_f.push_back(m);
    out.history.push_back(std::move(label));
  };
  for (std::size_t i = 0; i < gens.size(); ++i) try_add(to_double(gens[i].to_dense()), "gen[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < out.ops_f.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Matrix<double> b = out.ops_f[i] * out.ops_f[j];
      b -= out.ops_f[j] * out.ops_f[i];
      try_add(b, "[#" + std::to_string(i) + ",#" + std::to_string(j) + "]");
    }
  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(out.ops_f.size()), static_cast<Eigen::Index>(n * n));
  for (std::size_t i = 0; i < out.ops_f.size(); ++i)
    for (std::size_t k = 0; k < n * n; ++k) stacked(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = out.ops_f[i].data()[k];
  out.closed = svd_rank(stacked, kTolerances.svd_rank) == out.ops_f.size();
  return out;
}

}  // namespace

Rational triple_form(const JordanAlgebra& J, std::span<const Rational> u, std::span<const Rational> v) {
  const Matrix<Rational> l = l_operator<Rational>(J, u, v);
  Rational t(0);
  for (std::size_t i = 0; i < l.rows(); ++i) t += l(i, i);
  return t;
}

LieBasis bracket_closure(const std::vector<SparseOp>& gens, Mode mode) {
  if (mode == Mode::kFloat) return closure_float(gens);
  LieBasis out;
  if (gens.empty()) {
    out.closed = true;
    return out;
  }
  const std::size_t n = gens.front().size();
  out.ambient_dim = n * n;
  SparseEchelon ech(n * n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (ech.insert(gens[i].flatten())) {
      out.ops.push_back(gens[i]);
      out.history.push_back("gen[" + std::to_string(i) + "]");
    }
  }
  for (std::size_t i = 0; i < out.ops.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      SparseOp b = bracket(out.ops[i], out.ops[j]);
      if (b.is_zero()) continue;
      if (ech.insert(b.flatten())) {
        out.ops.push_back(std::move(b));
        out.history.push_back("[#" + std::to_string(i) + ",#" + std::to_string(j) + "]");
      }
    }
  out.closed = true;
  return out;
}

SparseEchelon span_echelon(const LieBasis& basis) {
  SparseEchelon ech(basis.ambient_dim);
  for (const auto& op : basis.ops) ech.insert(op.flatten());
  return ech;
}

std::vector<Vec<Rational>> trace_free_basis(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  const Vec<Rational> tau = trace_vector<Rational>(J);
  std::size_t p = 0;
  while (p < d && tau[p].is_zero()) ++p;
  std::vector<Vec<Rational>> out;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == p) continue;
    Vec<Rational> x = basis_vector(d, j);
    if (p < d) x[p] = -tau[j] / tau[p];
    out.push_back(std::move(x));
  }
  return out;
}

SymmetricPair restricted_pair(const JordanAlgebra& J) {
  if (!is_semisimple(J).semisimple)
    throw AlgebraError(ErrorKind::kNotSemisimple, J.name() + ": restricted pair needs a semi-simple algebra");
  SymmetricPair pair;
  pair.v0_basis = trace_free_basis(J);
  for (const auto& x : pair.v0_basis) pair.p_ops.push_back(t_sparse(J, x));
  std::vector<SparseOp> gens;
  for (std::size_t i = 0; i < pair.p_ops.size(); ++i)
    for (std::size_t j = i + 1; j < pair.p_ops.size(); ++j) {
      SparseOp b = bracket(pair.p_ops[i], pair.p_ops[j]);
      if (!b.is_zero()) gens.push_back(std::move(b));
    }
  pair.k = bracket_closure(gens, Mode::kRational);
  if (pair.k.ambient_dim == 0) pair.k.ambient_dim = J.dim() * J.dim();
  pair.theta.assign(pair.k.dim(), 1);
  pair.theta.insert(pair.theta.end(), pair.p_ops.size(), -1);
  return pair;
}

VerificationReport check_pair(const SymmetricPair& pair, const JordanAlgebra& J, std::uint64_t seed,
                              std::size_t derivation_samples) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d = J.dim();
  const std::size_t kd = pair.k.ops.size();
  VerificationReport rep;
  rep.target = J.name();
  rep.mode = Mode::kRational;

  std::vector<SparseOp> tb;
  for (std::size_t i = 0; i < d; ++i) tb.push_back(t_sparse(J, basis_vector(d, i)));
  auto t_of = [&](std::span<const Rational> u) {
    SparseOp t(d);
    for (std::size_t i = 0; i < d; ++i)
      if (!u[i].is_zero()) t = t + u[i] * tb[i];
    return t;
  };
  // phi_b[a][i] = Phi_a b_i.
  std::vector<std::vector<Vec<Rational>>> phi_b(kd);
  for (std::size_t a = 0; a < kd; ++a)
    for (std::size_t i = 0; i < d; ++i) phi_b[a].push_back(pair.k.ops[a].apply(basis_vector(d, i)));

  // (a) [Phi, T_u] = T_{Phi u}; then [k, p] lies in p once Phi u is in V0.
  Check a{"k_p_bracket", true, 0.0, kd * d, seed, ""};
  for (std::size_t s = 0; s < kd; ++s)
    for (std::size_t i = 0; i < d; ++i) {
      const SparseOp diff = bracket(pair.k.ops[s], tb[i]) - t_of(phi_b[s][i]);
      if (!diff.is_zero()) record(a, diff.flatten(), "k#" + std::to_string(s) + " with T_b" + std::to_string(i));
    }
  rep.checks.push_back(a);

  // (b) [p, p] in k.
  const SparseEchelon kspan = span_echelon(pair.k);
  Check b{"p_p_bracket", true, 0.0, 0, seed, ""};
  for (std::size_t i = 0; i < pair.p_ops.size(); ++i)
    for (std::size_t j = i + 1; j < pair.p_ops.size(); ++j) {
      ++b.samples;
      const SparseOp br = bracket(pair.p_ops[i], pair.p_ops[j]);
      if (br.is_zero()) continue;
      record(b, kspan.residual(br.flatten()), "[T_X" + std::to_string(i) + ",T_X" + std::to_string(j) + "]");
    }
  rep.checks.push_back(b);

  Check closed{"lie_closed", pair.k.closed, 0.0, kd * (kd > 0 ? kd - 1 : 0) / 2, seed, ""};
  if (!closed.pass) {
    closed.max_residual = 1.0;
    closed.detail = "closure loop did not certify the span";
  }
  rep.checks.push_back(closed);

  // (c) Effectiveness: the Phi in k commuting with every T_X (X in V0) and with k.
  Check eff{"effective", true, 0.0, pair.v0_basis.size(), seed, ""};
  if (kd > 0) {
    KernelTracker ker(kd);
    for (const auto& x : pair.v0_basis) {
      std::vector<Vec<Rational>> phix;
      for (std::size_t s = 0; s < kd; ++s) phix.push_back(pair.k.ops[s].apply(x));
      ker.constrain([&](const Vec<Rational>& coef) {
        Vec<Rational> out(d, Rational(0));
        for (std::size_t s = 0; s < kd; ++s)
          if (!coef[s].is_zero())
            for (std::size_t r = 0; r < d; ++r) out[r] += coef[s] * phix[s][r];
        return out;
      });
      if (ker.dimension() == 0) break;
    }
    for (std::size_t l = 0; l < kd && ker.dimension() > 0; ++l) {
      std::vector<Vec<Rational>> br;
      for (std::size_t s = 0; s < kd; ++s) br.push_back(bracket(pair.k.ops[s], pair.k.ops[l]).flatten());
      ker.constrain([&](const Vec<Rational>& coef) {
        Vec<Rational> out(d * d, Rational(0));
        for (std::size_t s = 0; s < kd; ++s)
          if (!coef[s].is_zero())
            for (std::size_t r = 0; r < d * d; ++r)
              if (!br[s][r].is_zero()) out[r] += coef[s] * br[s][r];
        return out;
      });
    }
    if (ker.dimension() > 0) {
      eff.pass = false;
      eff.max_residual = static_cast<double>(ker.dimension());
      eff.detail = "k meets the center of g in dimension " + std::to_string(ker.dimension());
    }
  }
  rep.checks.push_back(eff);

  // (d) Derivation of the product, on seeded random pairs.
  std::mt19937_64 rng(seed);
  Check der{"derivation", true, 0.0, derivation_samples * kd, seed, ""};
  for (std::size_t smp = 0; smp < derivation_samples; ++smp) {
    const Vec<Rational> u = random_element(d, rng), v = random_element(d, rng);
    const Vec<Rational> uv = product<Rational>(J, u, v);
    for (std::size_t s = 0; s < kd; ++s) {
      const SparseOp& phi = pair.k.ops[s];
      const Vec<Rational> pu = phi.apply(u), pv = phi.apply(v);
      Vec<Rational> r = phi.apply(uv);
      const Vec<Rational> x = product<Rational>(J, pu, v);
      const Vec<Rational> y = product<Rational>(J, u, pv);
      for (std::size_t i = 0; i < d; ++i) r[i] -= x[i] + y[i];
      record(der, r, "k#" + std::to_string(s) + " sample " + std::to_string(smp));
    }
  }
  rep.checks.push_back(der);

  // (e) Phi(V) in V0: tau^T Phi = 0.
  const Vec<Rational> tau = trace_vector<Rational>(J);
  Check img{"image_in_v0", true, 0.0, kd, seed, ""};
  for (std::size_t s = 0; s < kd; ++s) {
    Vec<Rational> row(d, Rational(0));
    for (std::size_t r = 0; r < d; ++r) {
      if (tau[r].is_zero()) continue;
      for (const auto& [c, x] : pair.k.ops[s].row(r)) row[c] += tau[r] * x;
    }
    record(img, row, "k#" + std::to_string(s));
  }
  rep.checks.push_back(img);

  // (f) <Phi u, v> = -<u, Phi v>: G Phi + (G Phi)^T = 0.
  const Matrix<Rational> G = gram(J);
  Check skew{"skew_symmetric", true, 0.0, kd, seed, ""};
  for (std::size_t s = 0; s < kd; ++s) {
    Matrix<Rational> gp(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [c, x] : pair.k.ops[s].row(r))
        for (std::size_t i = 0; i < d; ++i)
          if (!G(i, r).is_zero()) gp(i, c) += G(i, r) * x;
    Matrix<Rational> sym(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sym(i, j) = gp(i, j) + gp(j, i);
    record(skew, sym, "k#" + std::to_string(s));
  }
  rep.checks.push_back(skew);

  Check unity{"kills_unity", true, 0.0, kd, seed, ""};
  if (J.unity())
    for (std::size_t s = 0; s < kd; ++s) record(unity, pair.k.ops[s].apply(*J.unity()), "k#" + std::to_string(s));
  rep.checks.push_back(unity);

  // dim span{L(b_i, b_j)} = dim k + dim V.
  Check dec{"structure_decomposition", true, 0.0, d * d, seed, ""};
  {
    SparseEchelon ech(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const SparseOp l = bracket(tb[i], tb[j]) + t_of(J.basis_product(i, j));
        if (!l.is_zero()) ech.insert(l.flatten());
      }
    if (ech.rank() != kd + d) {
      dec.pass = false;
      dec.max_residual = std::abs(static_cast<double>(ech.rank()) - static_cast<double>(kd + d));
      dec.detail = "dim span L(u,v) = " + std::to_string(ech.rank()) + ", dim k + dim V = " + std::to_string(kd + d);
    }
  }
  rep.checks.push_back(dec);

  rep.elapsed_ms = elapsed_since(t0);
  return rep;
}

VerificationReport check_triple(const JordanAlgebra& J, std::size_t samples, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t d = J.dim();
  const Vec<Rational>& e = J.require_unity();
  VerificationReport rep;
  rep.target = J.name();
  rep.mode = Mode::kRational;
  std::mt19937_64 rng(seed);
  Check jt1{"jt1", true, 0.0, samples, seed, ""};
  Check jt2{"jt2", true, 0.0, samples, seed, ""};
  Check lsum{"l_sum", true, 0.0, samples, seed, ""};
  Check ldiff{"l_difference", true, 0.0, samples, seed, ""};
  Check adj{"l_adjoint", true, 0.0, samples, seed, ""};
  Check tf{"triple_form_equals_trace_form", true, 0.0, samples, seed, ""};
  Check shift{"bracket_shift", true, 0.0, samples, seed, ""};
  const std::vector<Vec<Rational>> v0 = trace_free_basis(J);
  std::uniform_int_distribution<int> small(-3, 3);
  bool literal_jt1 = false, literal_jt2 = false;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string where = "sample " + std::to_string(s);
    const Vec<Rational> u = random_element(d, rng), v = random_element(d, rng), w = random_element(d, rng),
                        z = random_element(d, rng);
    const Matrix<Rational> luv = l_operator<Rational>(J, u, v);
    const Matrix<Rational> lvu = l_operator<Rational>(J, v, u);
    const Matrix<Rational> tu = t_operator<Rational>(J, u), tv = t_operator<Rational>(J, v);

    // {u,v,w} is symmetric in its outer slots: L(u,v)w = L(w,v)u.
    {
      Vec<Rational> r = luv.apply(w);
      const Vec<Rational> t = triple<Rational>(J, w, v, u);
      for (std::size_t i = 0; i < d; ++i) r[i] -= t[i];
      record(jt1, r, where);
      if (s == 0) {
        Vec<Rational> lit = luv.apply(w);
        const Vec<Rational> t2 = l_operator<Rational>(J, u, w).apply(v);
        for (std::size_t i = 0; i < d; ++i) lit[i] -= t2[i];
        literal_jt1 = std::any_of(lit.begin(), lit.end(), [](const Rational& x) { return !x.is_zero(); });
      }
    }
    // [L(w,z), L(u,v)] = L(L(w,z)u, v) - L(u, L(z,w)v).
    {
      const Matrix<Rational> lwz = l_operator<Rational>(J, w, z);
      const Matrix<Rational> lzw = l_operator<Rational>(J, z, w);
      Matrix<Rational> lhs = commutator(lwz, luv);
      const Vec<Rational> lu = lwz.apply(u), lv = lzw.apply(v);
      lhs -= l_operator<Rational>(J, lu, v);
      lhs += l_operator<Rational>(J, u, lv);
      record(jt2, lhs, where);
      if (s == 0) {
        Matrix<Rational> lit = commutator(lwz, luv);
        lit -= l_operator<Rational>(J, lu, v);
        lit += l_operator<Rational>(J, u, lwz.apply(v));
        literal_jt2 = !lit.is_zero();
      }
    }
    {
      const Vec<Rational> uv = product<Rational>(J, u, v);
      Matrix<Rational> m = luv + lvu;
      Matrix<Rational> t = t_operator<Rational>(J, uv);
      t *= Rational(2);
      m -= t;
      record(lsum, m, where);
      Matrix<Rational> diff = luv - lvu;
      Matrix<Rational> c = commutator(tu, tv);
      c *= Rational(2);
      diff -= c;
      record(ldiff, diff, where);
    }
    {
      const Vec<Rational> lw = luv.apply(w);
      const Vec<Rational> lz = lvu.apply(z);
      record(adj, triple_form(J, lw, z) - triple_form(J, w, lz), where);
    }
    record(tf, triple_form(J, u, v) - trace_form<Rational>(J, u, v), where);
    if (!v0.empty()) {
      Vec<Rational> x(d, Rational(0)), y(d, Rational(0));
      for (const auto& b : v0) {
        const int cx = small(rng), cy = small(rng);
        for (std::size_t i = 0; i < d; ++i) {
          if (cx) x[i] += Rational(cx) * b[i];
          if (cy) y[i] += Rational(cy) * b[i];
        }
      }
      const Rational lam(small(rng), 2), mu(small(rng), 2);
      Vec<Rational> xs = x, ys = y;
      for (std::size_t i = 0; i < d; ++i) {
        xs[i] += lam * e[i];
        ys[i] += mu * e[i];
      }
      Matrix<Rational> m = commutator(t_operator<Rational>(J, xs), t_operator<Rational>(J, ys));
      m -= commutator(t_operator<Rational>(J, x), t_operator<Rational>(J, y));
      record(shift, m, where);
    }
  }
  if (literal_jt1)
    rep.notes.push_back("jt1 as L(u,v)w = L(u,w)v does not hold for this triple product; checked L(u,v)w = L(w,v)u");
  if (literal_jt2)
    rep.notes.push_back("jt2 with L(w,z)v in the last slot does not hold; checked L(u, L(z,w)v)");
  for (auto* c : {&jt1, &jt2, &lsum, &ldiff, &adj, &tf, &shift}) rep.checks.push_back(*c);
  rep.elapsed_ms = elapsed_since(t0);
  return rep;
}

}  // namespace jordanaff
