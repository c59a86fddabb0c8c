#include "jordanaff/calabi.hpp"

#include <cmath>
#include <sstream>

#include "jordanaff/config.hpp"

namespace jordanaff {

JordanAlgebra direct_sum(const std::vector<JordanAlgebra>& factors, std::string name) {
  std::size_t d = 0;
  for (const auto& f : factors) d += f.dim();
  std::vector<Vec<Vec<Rational>>> prod(d, Vec<Vec<Rational>>(d, Vec<Rational>(d, Rational(0))));
  Vec<Rational> e(d, Rational(0));
  bool unital = true;
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    const JordanAlgebra& f = factors[a];
    for (std::size_t i = 0; i < f.dim(); ++i)
      for (std::size_t j = 0; j < f.dim(); ++j)
        for (const auto& [k, x] : f.table<Rational>(i, j)) prod[off + i][off + j][off + k] = x;
    if (f.unity()) {
      for (std::size_t i = 0; i < f.dim(); ++i) e[off + i] = (*f.unity())[i];
    } else {
      unital = false;
    }
    for (const auto& l : f.labels()) labels.push_back(std::to_string(a + 1) + ":" + l);
    off += f.dim();
  }
  if (name.empty()) {
    std::ostringstream os;
    for (std::size_t a = 0; a < factors.size(); ++a) os << (a ? " + " : "") << factors[a].name();
    name = factors.empty() ? "zero" : os.str();
  }
  std::optional<Vec<Rational>> unity;
  if (unital && d > 0) unity = std::move(e);
  JordanAlgebra J(name, std::move(prod), std::move(unity), Mode::kRational, std::move(labels));
  J.set_family("direct_sum");
  return J;
}

CalabiModel compose(const CalabiSpec& spec, ModelOptions opts) {
  if (spec.L1.is_zero()) throw AlgebraError(ErrorKind::kInvalidArgument, "calabi: target L1 must be nonzero");
  if (spec.factors.empty()) throw AlgebraError(ErrorKind::kInvalidArgument, "calabi: no factors");
  std::vector<JordanAlgebra> algs;
  CalabiModel cm;
  std::size_t off = 0;
  for (std::size_t a = 0; a < spec.factors.size(); ++a) {
    const auto& f = spec.factors[a];
    if (f.L1.is_zero())
      throw AlgebraError(ErrorKind::kInvalidArgument, "calabi: factor " + std::to_string(a) + " has L1 = 0");
    f.algebra.require_unity();
    algs.push_back(f.algebra);
    cm.offsets.push_back(off);
    cm.dims.push_back(f.algebra.dim());
    cm.C_factor.push_back(scale_constant(f.algebra.dim() - 1, f.L1.to_double()));
    off += f.algebra.dim();
  }
  const JordanAlgebra sum = spec.factors.size() == 1 ? spec.factors[0].algebra : direct_sum(algs);
  cm.model = build_model(sum, spec.L1, opts);
  for (double ca : cm.C_factor) cm.c.push_back(cm.model.C / ca);
  return cm;
}

Vec<double> compose_point(const CalabiModel& cm, std::span<const double> t,
                          const std::vector<Vec<double>>& factor_points) {
  const std::size_t r = cm.dims.size();
  if (t.size() != r || factor_points.size() != r)
    throw AlgebraError(ErrorKind::kDimensionMismatch, "compose_point: expected " + std::to_string(r) + " factors");
  double constraint = 0.0, scale = 0.0;
  for (std::size_t a = 0; a < r; ++a) {
    constraint += static_cast<double>(cm.dims[a]) * t[a];
    scale = std::max(scale, std::abs(static_cast<double>(cm.dims[a]) * t[a]));
  }
  if (std::abs(constraint) > kTolerances.t0_constraint * std::max(1.0, scale)) {
    std::ostringstream os;
    os << "T0 constraint sum (n_a + 1) t_a = 0 violated: " << constraint;
    throw AlgebraError(ErrorKind::kConstraintViolated, os.str());
  }
  Vec<double> p(cm.model.algebra.dim(), 0.0);
  for (std::size_t a = 0; a < r; ++a) {
    if (factor_points[a].size() != cm.dims[a])
      throw AlgebraError(ErrorKind::kDimensionMismatch, "compose_point: factor " + std::to_string(a) + " point length");
    const double s = cm.c[a] * std::exp(t[a]);
    for (std::size_t i = 0; i < cm.dims[a]; ++i) p[cm.offsets[a] + i] = s * factor_points[a][i];
  }
  return p;
}

std::vector<Vec<Rational>> central_directions(const CalabiModel& cm) {
  const std::size_t r = cm.dims.size();
  const std::size_t d = cm.model.algebra.dim();
  const Vec<Rational>& e = cm.model.e;
  auto block_unity = [&](std::size_t a) {
    Vec<Rational> v(d, Rational(0));
    for (std::size_t i = 0; i < cm.dims[a]; ++i) v[cm.offsets[a] + i] = e[cm.offsets[a] + i];
    return v;
  };
  // (n_a + 1) is tr T_{e_a}; e_a / (n_a+1) - e_{a+1} / (n_{a+1}+1) is traceless.
  std::vector<Vec<Rational>> out;
  for (std::size_t a = 0; a + 1 < r; ++a) {
    Vec<Rational> v = block_unity(a);
    const Vec<Rational> w = block_unity(a + 1);
    const Rational da(static_cast<std::int64_t>(cm.dims[a])), db(static_cast<std::int64_t>(cm.dims[a + 1]));
    for (std::size_t i = 0; i < d; ++i) v[i] = v[i] / da - w[i] / db;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace jordanaff
