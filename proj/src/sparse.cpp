#include "jordanaff/sparse.hpp"

#include <algorithm>

namespace jordanaff {

void SparseEchelon::reduce(Vec<Rational>& w) const {
  for (const auto& [pivot, r] : pivot_to_row_) {
    if (w[pivot].is_zero()) continue;
    const Rational f = w[pivot];
    for (const auto& [j, x] : rows_[r].entries) w[j] -= f * x;
  }
}

Vec<Rational> SparseEchelon::residual(std::span<const Rational> v) const {
  Vec<Rational> w(v.begin(), v.end());
  reduce(w);
  return w;
}

bool SparseEchelon::contains(std::span<const Rational> v) const { return all_zero<Rational>(residual(v)); }

bool SparseEchelon::insert(std::span<const Rational> v) {
  Vec<Rational> w = residual(v);
  std::size_t lead = 0;
  while (lead < w.size() && w[lead].is_zero()) ++lead;
  if (lead == w.size()) return false;
  const Rational inv = Rational(1) / w[lead];
  SparseVec<Rational> row;
  for (std::size_t j = lead; j < w.size(); ++j)
    if (!w[j].is_zero()) row.entries.emplace_back(j, w[j] * inv);
  pivot_to_row_.emplace(lead, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

KernelTracker::KernelTracker(std::size_t dim) {
  basis_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec<Rational> e(dim, Rational(0));
    e[i] = Rational(1);
    basis_.push_back(std::move(e));
  }
}

void KernelTracker::absorb(const std::vector<Vec<Rational>>& images) {
  const std::size_t k = basis_.size();
  const std::size_t rows = images.front().size();
  Matrix<Rational> m(rows, k);
  bool any = false;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (!images[c][r].is_zero()) {
        m(r, c) = images[c][r];
        any = true;
      }
  if (!any) return;
  const auto kernel = nullspace(m);
  std::vector<Vec<Rational>> next;
  next.reserve(kernel.size());
  const std::size_t dim = basis_.front().size();
  for (const auto& coeffs : kernel) {
    Vec<Rational> v(dim, Rational(0));
    for (std::size_t c = 0; c < k; ++c) {
      if (coeffs[c].is_zero()) continue;
      for (std::size_t i = 0; i < dim; ++i)
        if (!basis_[c][i].is_zero()) v[i] += coeffs[c] * basis_[c][i];
    }
    next.push_back(std::move(v));
  }
  basis_ = std::move(next);
}


SparseOp SparseOp::from_dense(const Matrix<Rational>& m) {
  SparseOp out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.rows_[i].emplace_back(j, m(i, j));
  return out;
}

std::size_t SparseOp::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseOp::is_zero() const noexcept {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

Matrix<Rational> SparseOp::to_dense() const {
  const std::size_t n = size();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, x] : rows_[i]) m(i, j) = x;
  return m;
}

Vec<Rational> SparseOp::flatten() const {
  const std::size_t n = size();
  Vec<Rational> v(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, x] : rows_[i]) v[i * n + j] = x;
  return v;
}

Vec<Rational> SparseOp::apply(std::span<const Rational> x) const {
  Vec<Rational> y(size(), Rational(0));
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& [j, a] : rows_[i])
      if (!x[j].is_zero()) y[i] += a * x[j];
  return y;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  const std::size_t n = a.size();
  SparseOp out(n);
  Vec<Rational> acc(n, Rational(0));
  std::vector<std::size_t> touched;
  std::vector<char> mark(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    touched.clear();
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) {
        if (!mark[j]) {
          mark[j] = 1;
          touched.push_back(j);
        }
        acc[j] += x * y;
      }
    std::sort(touched.begin(), touched.end());
    for (std::size_t j : touched) {
      if (!acc[j].is_zero()) out.rows_[i].emplace_back(j, acc[j]);
      acc[j] = Rational(0);
      mark[j] = 0;
    }
  }
  return out;
}

SparseOp operator*(const Rational& s, const SparseOp& a) {
  SparseOp out(a.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& [j, x] : a.rows_[i]) out.rows_[i].emplace_back(j, s * x);
  return out;
}

SparseOp SparseOp::combine(const SparseOp& a, const SparseOp& b, const Rational& sb) {
  SparseOp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ra = a.rows_[i];
    const auto& rb = b.rows_[i];
    auto& ro = out.rows_[i];
    std::size_t p = 0, q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
        ro.push_back(ra[p++]);
      } else if (p == ra.size() || rb[q].first < ra[p].first) {
        ro.emplace_back(rb[q].first, sb * rb[q].second);
        ++q;
      } else {
        Rational v = ra[p].second + sb * rb[q].second;
        if (!v.is_zero()) ro.emplace_back(ra[p].first, std::move(v));
        ++p;
        ++q;
      }
    }
  }
  return out;
}

}  // namespace jordanaff
