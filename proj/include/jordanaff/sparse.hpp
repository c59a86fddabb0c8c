#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jordanaff/linalg.hpp"
#include "jordanaff/rational.hpp"

namespace jordanaff {

/// Sorted (index, value) list with no explicit zeros.
template <class T>
struct SparseVec {
  std::vector<std::pair<std::size_t, T>> entries;

  static SparseVec from_dense(std::span<const T> v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) s.entries.emplace_back(i, v[i]);
    return s;
  }
  [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
  [[nodiscard]] std::size_t nnz() const noexcept { return entries.size(); }
};

/// Incrementally built row-echelon basis of a subspace of T^dim. Rows are kept
/// sparse and normalized to a leading 1; reduction walks the pivots in
/// increasing column order against a dense scratch vector.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v to the span. Returns true iff v was not already in it.
  bool insert(std::span<const Rational> v);
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  /// v minus its projection along the current rows; zero iff v is in the span.
  [[nodiscard]] Vec<Rational> residual(std::span<const Rational> v) const;

 private:
  void reduce(Vec<Rational>& w) const;

  std::size_t dim_;
  std::vector<SparseVec<Rational>> rows_;
  std::map<std::size_t, std::size_t> pivot_to_row_;
};

/// Running basis of the kernel of a linear map given block by block: start
/// from the whole coordinate space and intersect with ker(M) for each block M
/// fed in. Work per block is proportional to the current kernel dimension.
class KernelTracker {
 public:
  explicit KernelTracker(std::size_t dim);

  /// `apply(x)` must return M x for the next constraint block M.
  template <class F>
  void constrain(F&& apply) {
    if (basis_.empty()) return;
    std::vector<Vec<Rational>> images;
    images.reserve(basis_.size());
    for (const auto& b : basis_) images.push_back(apply(b));
    absorb(images);
  }

  [[nodiscard]] const std::vector<Vec<Rational>>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  void absorb(const std::vector<Vec<Rational>>& images);

  std::vector<Vec<Rational>> basis_;
};

/// Square operator stored row-wise with no explicit zeros.
class SparseOp {
 public:
  SparseOp() = default;
  explicit SparseOp(std::size_t n) : rows_(n) {}
  static SparseOp from_dense(const Matrix<Rational>& m);

  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<std::pair<std::size_t, Rational>>& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] std::size_t nnz() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept;

  [[nodiscard]] Matrix<Rational> to_dense() const;
  /// Row-major flattening, the coordinates used for span tests.
  [[nodiscard]] Vec<Rational> flatten() const;
  [[nodiscard]] Vec<Rational> apply(std::span<const Rational> x) const;

  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator+(const SparseOp& a, const SparseOp& b) { return combine(a, b, Rational(1)); }
  friend SparseOp operator-(const SparseOp& a, const SparseOp& b) { return combine(a, b, Rational(-1)); }
  friend SparseOp operator*(const Rational& s, const SparseOp& a);

 private:
  static SparseOp combine(const SparseOp& a, const SparseOp& b, const Rational& sb);

  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
};

/// AB - BA.
inline SparseOp bracket(const SparseOp& a, const SparseOp& b) { return a * b - b * a; }

}  // namespace jordanaff
