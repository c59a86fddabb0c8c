#pragma once

// Cayley-Dickson algebras over an exact or floating coefficient field.
//
// Doubling convention, applied at every level with that level's sign gamma:
//
//     (x, y)(u, v) = (x u + gamma conj(v) y,  v x + y conj(u))
//     conj(x, y)   = (conj(x), -y)
//
// so that N(x, y) = N(x) - gamma N(y): gamma = -1 gives the division algebra,
// gamma = +1 the split one. Coefficients are stored with the last doubling
// outermost; index bit b selects the second half at level b. With all gammas
// -1 this yields the octonion table
//
//     e1 = i, e2 = j, e3 = e1 e2, e4 = l, e5 = e1 e4, e6 = e2 e4, e7 = e3 e4
//
// and in particular i j = k for the quaternions.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jordanaff/errors.hpp"
#include "jordanaff/linalg.hpp"

namespace jordanaff {

struct CDSignature {
  std::vector<int> gammas;  // each +1 (split) or -1 (division); at most 3

  CDSignature() = default;
  explicit CDSignature(std::vector<int> g);

  static CDSignature reals() { return {}; }
  static CDSignature complex() { return CDSignature({-1}); }
  static CDSignature quaternion() { return CDSignature({-1, -1}); }
  static CDSignature octonion() { return CDSignature({-1, -1, -1}); }
  static CDSignature split_complex() { return CDSignature({1}); }
  static CDSignature split_quaternion() { return CDSignature({-1, 1}); }
  static CDSignature split_octonion() { return CDSignature({-1, -1, 1}); }

  [[nodiscard]] std::size_t doublings() const noexcept { return gammas.size(); }
  [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << gammas.size(); }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const CDSignature&, const CDSignature&) = default;
};

namespace detail {

template <class T>
std::vector<T> cd_conj_raw(std::span<const T> a) {
  std::vector<T> out(a.begin(), a.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

template <class T>
std::vector<T> cd_mul_raw(std::span<const T> a, std::span<const T> b, std::span<const int> gammas) {
  if (gammas.empty()) return {a[0] * b[0]};
  const std::size_t h = a.size() / 2;
  const auto inner = gammas.first(gammas.size() - 1);
  const T gamma(gammas.back());
  std::span<const T> x = a.first(h), y = a.subspan(h), u = b.first(h), v = b.subspan(h);
  const std::vector<T> vc = cd_conj_raw(v);
  const std::vector<T> uc = cd_conj_raw(u);
  std::vector<T> first = cd_mul_raw<T>(x, u, inner);
  std::vector<T> vcy = cd_mul_raw<T>(vc, y, inner);
  std::vector<T> second = cd_mul_raw<T>(v, x, inner);
  std::vector<T> yuc = cd_mul_raw<T>(y, uc, inner);
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = first[i] + gamma * vcy[i];
    out[h + i] = second[i] + yuc[i];
  }
  return out;
}

}  // namespace detail

/// Element of the Cayley-Dickson algebra selected by a signature.
template <class T>
class CDScalar {
 public:
  CDScalar() : coeffs_(1, T(0)) {}
  explicit CDScalar(CDSignature sig) : sig_(std::move(sig)), coeffs_(sig_.dim(), T(0)) {}
  CDScalar(CDSignature sig, std::vector<T> coeffs) : sig_(std::move(sig)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.dim())
      throw AlgebraError(ErrorKind::kDimensionMismatch, "CDScalar: coefficient count does not match signature");
  }

  static CDScalar real(const CDSignature& sig, T value) {
    CDScalar s(sig);
    s.coeffs_[0] = std::move(value);
    return s;
  }
  static CDScalar unit(const CDSignature& sig, std::size_t index) {
    CDScalar s(sig);
    s.coeffs_.at(index) = T(1);
    return s;
  }

  [[nodiscard]] const CDSignature& signature() const noexcept { return sig_; }
  [[nodiscard]] std::span<const T> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  [[nodiscard]] const T& real_part() const { return coeffs_[0]; }
  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!jordanaff::is_zero(c)) return false;
    return true;
  }

  friend CDScalar operator+(const CDScalar& a, const CDScalar& b) {
    check(a, b);
    CDScalar r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend CDScalar operator-(const CDScalar& a, const CDScalar& b) {
    check(a, b);
    CDScalar r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }
  CDScalar operator-() const {
    CDScalar r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CDScalar operator*(const CDScalar& a, const CDScalar& b) { return cd_mul(a, b); }
  friend CDScalar operator*(const T& s, CDScalar a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }
  CDScalar& operator+=(const CDScalar& o) { return *this = *this + o; }
  CDScalar& operator-=(const CDScalar& o) { return *this = *this - o; }
  friend bool operator==(const CDScalar& a, const CDScalar& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  friend CDScalar cd_mul(const CDScalar& a, const CDScalar& b) {
    check(a, b);
    return CDScalar(a.sig_, detail::cd_mul_raw<T>(a.coeffs_, b.coeffs_, a.sig_.gammas));
  }
  friend CDScalar cd_conj(const CDScalar& a) { return CDScalar(a.sig_, detail::cd_conj_raw<T>(a.coeffs_)); }
  /// Norm form N(a) = real part of a conj(a); indefinite for split signatures.
  friend T cd_norm(const CDScalar& a) { return (a * cd_conj(a)).real_part(); }

 private:
  static void check(const CDScalar& a, const CDScalar& b) {
    if (!(a.sig_ == b.sig_))
      throw AlgebraError(ErrorKind::kSignatureMismatch, "CDScalar: " + a.sig_.str() + " vs " + b.sig_.str());
  }

  CDSignature sig_;
  std::vector<T> coeffs_;
};

template <class T>
bool is_zero(const CDScalar<T>& a) {
  return a.is_zero();
}

/// Associator (ab)c - a(bc); zero for k <= 2, nonzero in general for octonions.
template <class T>
CDScalar<T> associator(const CDScalar<T>& a, const CDScalar<T>& b, const CDScalar<T>& c) {
  return (a * b) * c - a * (b * c);
}

/// Embedding of a quaternion x + y j (x, y complex) as [[x, y], [-conj(y), conj(x)]].
/// Only meaningful for the division quaternion signature.
template <class T>
Matrix<Complex<T>> quaternion_to_complex2(const CDScalar<T>& q) {
  if (!(q.signature() == CDSignature::quaternion()))
    throw AlgebraError(ErrorKind::kSignatureMismatch, "complex embedding needs quaternions");
  const Complex<T> x(q[0], q[1]);
  const Complex<T> y(q[2], q[3]);
  Matrix<Complex<T>> m(2, 2);
  m(0, 0) = x;
  m(0, 1) = y;
  m(1, 0) = -y.conj();
  m(1, 1) = x.conj();
  return m;
}

}  // namespace jordanaff
