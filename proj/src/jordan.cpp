#include "jordanaff/jordan.hpp"

#include <algorithm>
#include <cmath>

#include "jordanaff/config.hpp"
#include "jordanaff/numeric.hpp"
#include "jordanaff/sparse.hpp"

namespace jordanaff {

JordanAlgebra::JordanAlgebra(std::string name, std::vector<Vec<Vec<Rational>>> products,
                             std::optional<Vec<Rational>> unity, Mode mode, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), dim_(products.size()), mode_(mode) {
  for (const auto& row : products) {
    if (row.size() != dim_) throw AlgebraError(ErrorKind::kDimensionMismatch, "JordanAlgebra: product table shape");
    for (const auto& v : row)
      if (v.size() != dim_) throw AlgebraError(ErrorKind::kDimensionMismatch, "JordanAlgebra: product table shape");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  if (labels_.size() != dim_) throw AlgebraError(ErrorKind::kDimensionMismatch, "JordanAlgebra: label count");
  build_tables(products);
  set_unity(std::move(unity));
}

JordanAlgebra JordanAlgebra::from_tensor(std::string name, const std::vector<std::vector<Vec<Rational>>>& c,
                                         std::optional<Vec<Rational>> unity, Mode mode,
                                         std::vector<std::string> labels) {
  return JordanAlgebra(std::move(name), c, std::move(unity), mode, std::move(labels));
}

void JordanAlgebra::build_tables(const std::vector<Vec<Vec<Rational>>>& products) {
  table_.assign(dim_ * dim_, {});
  table_d_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& x = products[i][j][k];
        if (x.is_zero()) continue;
        table_[i * dim_ + j].emplace_back(k, x);
        table_d_[i * dim_ + j].emplace_back(k, x.to_double());
      }
}

void JordanAlgebra::set_unity(std::optional<Vec<Rational>> e) {
  if (e && e->size() != dim_) throw AlgebraError(ErrorKind::kDimensionMismatch, "JordanAlgebra: unity length");
  unity_ = std::move(e);
}

const Vec<Rational>& JordanAlgebra::require_unity() const {
  if (!unity_) throw AlgebraError(ErrorKind::kNotUnital, "algebra '" + name_ + "' has no unity");
  return *unity_;
}

Rational JordanAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, x] : table_[i * dim_ + j])
    if (idx == k) return x;
  return Rational(0);
}

Vec<Rational> JordanAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec<Rational> v(dim_, Rational(0));
  for (const auto& [k, x] : table_[i * dim_ + j]) v[k] = x;
  return v;
}

std::vector<std::vector<Vec<Rational>>> JordanAlgebra::tensor() const {
  std::vector<std::vector<Vec<Rational>>> c(dim_, std::vector<Vec<Rational>>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) c[i][j] = basis_product(i, j);
  return c;
}

std::optional<std::array<std::size_t, 3>> JordanAlgebra::first_asymmetry() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (table_[i * dim_ + j] == table_[j * dim_ + i]) continue;
      const Vec<Rational> a = basis_product(i, j);
      const Vec<Rational> b = basis_product(j, i);
      for (std::size_t k = 0; k < dim_; ++k)
        if (a[k] != b[k]) return std::array<std::size_t, 3>{i, j, k};
    }
  return std::nullopt;
}

Vec<Rational> basis_vector(std::size_t dim, std::size_t i) {
  Vec<Rational> v(dim, Rational(0));
  v.at(i) = Rational(1);
  return v;
}

Vec<Rational> zero_vector(std::size_t dim) { return Vec<Rational>(dim, Rational(0)); }

Vec<Rational> random_element(std::size_t dim, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  Vec<Rational> v(dim);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

template <>
std::pair<Rational, Rational> element_det_trace<Rational>(const JordanAlgebra& J, std::span<const Rational> u) {
  return {determinant(p_operator<Rational>(J, u)), dot<Rational>(trace_vector<Rational>(J), u)};
}

template <>
std::pair<double, double> element_det_trace<double>(const JordanAlgebra& J, std::span<const double> u) {
  return {determinant(p_operator<double>(J, u)), dot<double>(trace_vector<double>(J), u)};
}

Matrix<Rational> gram(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  const Vec<Rational> tau = trace_vector<Rational>(J);
  Matrix<Rational> g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational s(0);
      for (const auto& [k, x] : J.table<Rational>(i, j))
        if (!tau[k].is_zero()) s += x * tau[k];
      g(i, j) = std::move(s);
    }
  return g;
}

namespace {

template <class T>
VerificationReport check_jordan_impl(const JordanAlgebra& J, std::uint64_t seed, std::size_t random_samples) {
  const std::size_t d = J.dim();
  VerificationReport rep;
  rep.target = J.name();
  rep.mode = J.mode();

  Check ja1{"JA1_commutativity", true, 0.0, d * d, seed, ""};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& a = J.table<T>(i, j);
      const auto& b = J.table<T>(j, i);
      if (a == b) continue;
      if (ja1.detail.empty())
        ja1.detail = "b" + std::to_string(i) + " o b" + std::to_string(j) + " != b" + std::to_string(j) + " o b" +
                     std::to_string(i);
      Vec<T> diff(d, T(0));
      for (const auto& [k, x] : a) diff[k] += x;
      for (const auto& [k, x] : b) diff[k] -= x;
      const double r = max_abs<T>(diff);
      ja1.max_residual = std::max(ja1.max_residual, r);
    }

  std::vector<Vec<T>> samples;
  for (std::size_t i = 0; i < d; ++i) {
    Vec<T> v(d, T(0));
    v[i] = T(1);
    samples.push_back(std::move(v));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < random_samples; ++s) {
    const Vec<Rational> r = random_element(d, rng);
    Vec<T> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      if constexpr (std::is_same_v<T, double>)
        v[i] = r[i].to_double();
      else
        v[i] = r[i];
    }
    samples.push_back(std::move(v));
  }
  Check ja2{"JA2_jordan_identity", true, 0.0, samples.size() * d, seed, ""};
  double scale = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Vec<T>& u = samples[s];
    const Matrix<T> tu = t_operator<T>(J, std::span<const T>(u));
    const Vec<T> u2 = product<T>(J, u, u);
    const Matrix<T> tu2 = t_operator<T>(J, std::span<const T>(u2));
    const Matrix<T> a = tu * tu2;
    scale = std::max(scale, max_abs(a));
    const Matrix<T> diff = a - tu2 * tu;
    if (!diff.is_zero() && ja2.detail.empty())
      ja2.detail = s < d ? "u = b" + std::to_string(s) : "u = random sample " + std::to_string(s - d);
    const double r = max_abs(diff);
    if (r > ja2.max_residual) {
      ja2.max_residual = r;
      ja2.detail = s < d ? "u = b" + std::to_string(s) : "u = random sample " + std::to_string(s - d);
    }
  }
  if constexpr (std::is_same_v<T, double>) {
    ja1.pass = ja1.max_residual <= kTolerances.absolute;
    if (ja1.pass) ja1.detail.clear();
    if (ja2.max_residual <= kTolerances.relative * scale + kTolerances.absolute) ja2.detail.clear();
    ja2.pass = ja2.max_residual <= kTolerances.relative * scale + kTolerances.absolute;
  } else {
    ja1.pass = ja1.detail.empty();
    ja2.pass = ja2.detail.empty();
  }
  rep.checks.push_back(std::move(ja1));
  rep.checks.push_back(std::move(ja2));
  return rep;
}

}  // namespace

VerificationReport check_jordan(const JordanAlgebra& J, std::uint64_t seed, std::size_t random_samples) {
  if (J.mode() == Mode::kFloat) return check_jordan_impl<double>(J, seed, random_samples);
  return check_jordan_impl<Rational>(J, seed, random_samples);
}

std::optional<Vec<Rational>> find_unity(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  if (d == 0) return std::nullopt;
  // Row (j, k): sum_i e_i c[i][j][k] = delta_jk.
  Matrix<Rational> a(d * d, d);
  Vec<Rational> rhs(d * d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    rhs[j * d + j] = Rational(1);
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [k, x] : J.table<Rational>(i, j)) a(j * d + k, i) = x;
  }
  auto e = solve(a, std::span<const Rational>(rhs));
  if (!e) return std::nullopt;
  // The solution is unique when it exists unless the algebra has zero
  // divisors of the whole space; confirm T_e = I directly.
  if (!(t_operator<Rational>(J, *e) == Matrix<Rational>::identity(d))) return std::nullopt;
  return e;
}

Vec<Rational> invert(const JordanAlgebra& J, std::span<const Rational> v) {
  const Vec<Rational>& e = J.require_unity();
  const Matrix<Rational> p = p_operator<Rational>(J, v);
  auto sol = solve<Rational>(p, v);
  if (!sol)
    throw AlgebraError(ErrorKind::kNotInvertible,
                       "det P_v = 0; v is invertible iff P_v is nondegenerate");
  Vec<Rational> w = std::move(*sol);
  if (product<Rational>(J, v, std::span<const Rational>(w)) != e)
    throw AlgebraError(ErrorKind::kNotInvertible, "v o v^{-1} != e");
  const Matrix<Rational> tv = t_operator<Rational>(J, v);
  const Matrix<Rational> tw = t_operator<Rational>(J, std::span<const Rational>(w));
  if (!commutator(tv, tw).is_zero()) throw AlgebraError(ErrorKind::kNotInvertible, "[T_v, T_{v^{-1}}] != 0");
  return w;
}

SemisimpleResult is_semisimple(const JordanAlgebra& J) {
  const Matrix<Rational> g = gram(J);
  SemisimpleResult r;
  r.gram_det = determinant(g);
  r.signature = inertia(g);
  r.semisimple = !r.gram_det.is_zero();
  return r;
}

bool is_nondegenerate(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  SparseEchelon ech(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix<Rational> t = t_operator<Rational>(J, basis_vector(d, i));
    if (!ech.insert(t.data())) return false;
  }
  return true;
}

JordanAlgebra isotope(const JordanAlgebra& J, std::span<const Rational> gamma) {
  const std::size_t d = J.dim();
  if (gamma.size() != d) throw AlgebraError(ErrorKind::kDimensionMismatch, "isotope: Gamma length");
  const Matrix<Rational> tg = t_operator<Rational>(J, gamma);
  std::vector<Vec<Rational>> bg(d);
  for (std::size_t j = 0; j < d; ++j) bg[j] = tg.col(j);
  std::vector<Vec<Vec<Rational>>> prod(d, Vec<Vec<Rational>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const Vec<Rational> bi = basis_vector(d, i);
    for (std::size_t j = i; j < d; ++j) {
      const Vec<Rational> bj = basis_vector(d, j);
      Vec<Rational> r = product<Rational>(J, bi, bg[j]) + product<Rational>(J, bj, bg[i]);
      r = r - tg.apply(J.basis_product(i, j));
      prod[i][j] = r;
      prod[j][i] = std::move(r);
    }
  }
  JordanAlgebra out(J.name() + "_isotope", std::move(prod), std::nullopt, J.mode(), J.labels());
  out.set_family(J.family());
  if (J.unity()) {
    try {
      Vec<Rational> e = invert(J, gamma);
      if (t_operator<Rational>(out, e) == Matrix<Rational>::identity(d)) out.set_unity(std::move(e));
    } catch (const AlgebraError&) {
      // Gamma not invertible: the isotope has no unity.
    }
  }
  return out;
}

std::vector<Vec<Rational>> center(const JordanAlgebra& J) {
  const std::size_t d = J.dim();
  KernelTracker kt(d);
  // [T_v, T_u] b_w = v o (u o w) - u o (v o w), stacked over w.
  auto block = [&](const Vec<Rational>& u) {
    std::vector<Vec<Rational>> uw(d);
    for (std::size_t w = 0; w < d; ++w) uw[w] = product<Rational>(J, u, basis_vector(d, w));
    return [&J, d, u, uw](const Vec<Rational>& v) {
      Vec<Rational> out;
      out.reserve(d * d);
      for (std::size_t w = 0; w < d; ++w) {
        const Vec<Rational> bw = basis_vector(d, w);
        const Vec<Rational> a = product<Rational>(J, v, uw[w]);
        const Vec<Rational> vw = product<Rational>(J, v, bw);
        const Vec<Rational> b = product<Rational>(J, u, vw);
        for (std::size_t k = 0; k < d; ++k) out.push_back(a[k] - b[k]);
      }
      return out;
    };
  };
  std::mt19937_64 rng(0x5eed);
  kt.constrain(block(random_element(d, rng)));
  for (std::size_t a = 0; a < d && kt.dimension() > 0; ++a) kt.constrain(block(basis_vector(d, a)));
  return kt.basis();
}

SubspaceCoords::SubspaceCoords(std::vector<Vec<Rational>> basis) : basis_(std::move(basis)) {
  const std::size_t k = basis_.size();
  if (k == 0) return;
  const std::size_t n = basis_.front().size();
  Matrix<Rational> b(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = basis_[i][j];
  Echelon<Rational> e = rref(b);
  if (e.pivots.size() != k) throw AlgebraError(ErrorKind::kInvalidArgument, "SubspaceCoords: basis is dependent");
  reduced_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
  // basis_i = sum_r K_ir R_r with K_ir = basis_i[p_r]; coords a_B solve K^T a_B = a_R.
  Matrix<Rational> kt(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) kt(r, i) = basis_[i][pivots_[r]];
  auto inv = inverse(kt);
  if (!inv) throw AlgebraError(ErrorKind::kInvalidArgument, "SubspaceCoords: singular change of basis");
  to_basis_ = std::move(*inv);
}

std::optional<Vec<Rational>> SubspaceCoords::coords(std::span<const Rational> x) const {
  const std::size_t k = basis_.size();
  if (k == 0) return all_zero(x) ? std::optional<Vec<Rational>>(Vec<Rational>{}) : std::nullopt;
  if (x.size() != reduced_.cols()) throw AlgebraError(ErrorKind::kDimensionMismatch, "SubspaceCoords: length");
  Vec<Rational> ar(k);
  for (std::size_t r = 0; r < k; ++r) ar[r] = x[pivots_[r]];
  Vec<Rational> check(x.size(), Rational(0));
  for (std::size_t r = 0; r < k; ++r) {
    if (ar[r].is_zero()) continue;
    const auto row = reduced_.row(r);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) check[j] += ar[r] * row[j];
  }
  for (std::size_t j = 0; j < x.size(); ++j)
    if (check[j] != x[j]) return std::nullopt;
  return to_basis_.apply(ar);
}

namespace {

JordanAlgebra rebuild(const JordanAlgebra& J, const std::vector<Vec<Rational>>& basis, std::string name,
                      bool whole_space) {
  const SubspaceCoords sc(basis);
  const std::size_t k = basis.size();
  if (whole_space && k != J.dim())
    throw AlgebraError(ErrorKind::kDimensionMismatch, "change_basis: need a full basis");
  std::vector<Vec<Vec<Rational>>> prod(k, Vec<Vec<Rational>>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Vec<Rational> p = product<Rational>(J, basis[a], basis[b]);
      auto c = sc.coords(p);
      if (!c)
        throw AlgebraError(ErrorKind::kNotInSubspace,
                           "product of basis vectors " + std::to_string(a) + ", " + std::to_string(b) +
                               " leaves the subspace");
      prod[a][b] = std::move(*c);
    }
  std::optional<Vec<Rational>> unity;
  if (J.unity()) unity = sc.coords(*J.unity());
  JordanAlgebra out(std::move(name), std::move(prod), std::nullopt, J.mode());
  if (unity && t_operator<Rational>(out, *unity) == Matrix<Rational>::identity(k))
    out.set_unity(std::move(unity));
  else if (!whole_space)
    out.set_unity(find_unity(out));
  out.set_family(J.family());
  return out;
}

}  // namespace

JordanAlgebra change_basis(const JordanAlgebra& J, const std::vector<Vec<Rational>>& basis) {
  return rebuild(J, basis, J.name(), true);
}

JordanAlgebra restrict_to_subspace(const JordanAlgebra& J, const std::vector<Vec<Rational>>& basis,
                                   std::string name) {
  return rebuild(J, basis, name.empty() ? J.name() + "_sub" : std::move(name), false);
}

}  // namespace jordanaff
