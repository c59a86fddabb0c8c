#include "jordanaff/linalg.hpp"

namespace jordanaff {

Rational determinant(const Matrix<Rational>& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  mpz_class lcm = 1;
  for (const auto& x : m.data()) {
    if (x.is_zero() || x.is_integer()) continue;
    const mpq_class q = x.to_mpq();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Rational& x = m.data()[i];
    if (x.is_zero()) continue;
    const mpq_class q = x.to_mpq();
    a[i] = q.get_num() * (lcm / q.get_den());
  }
  auto at = [&a, n](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(det, scale));
}

Inertia inertia(Matrix<Rational> m) {
  if (!m.square()) throw std::invalid_argument("inertia: matrix not square");
  const std::size_t n = m.rows();
  Inertia out;
  auto swap_index = [&m, n](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (!m(i, i).is_zero()) piv = i;
    if (piv == n) {
      // All remaining diagonal entries vanish; use an off-diagonal entry.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!m(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += n - k;
        return out;
      }
      // Congruence by row/col pj added into pi makes m(pi, pi) = 2 m(pi, pj).
      for (std::size_t j = 0; j < n; ++j) m(pi, j) += m(pj, j);
      for (std::size_t i = 0; i < n; ++i) m(i, pi) += m(i, pj);
      piv = pi;
    }
    swap_index(k, piv);
    const Rational d = m(k, k);
    (d.sign() > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) / d;
      for (std::size_t s = k + 1; s < n; ++s)
        if (!m(k, s).is_zero()) m(r, s) -= f * m(k, s);
      m(r, k) = 0;
    }
    for (std::size_t s = k + 1; s < n; ++s) m(k, s) = 0;
  }
  return out;
}

}  // namespace jordanaff
