#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

namespace jordanaff {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline and combined with 128-bit intermediates; anything larger spills to
/// a heap-allocated GMP rational and is demoted again as soon as it fits.
/// Structure constants of every catalog algebra have tiny denominators, so
/// nearly all arithmetic stays on the inline path.
class Rational {
 public:
  using i128 = __int128;
  using u128 = unsigned __int128;

  Rational() noexcept = default;
  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    const i128 v = static_cast<i128>(n);
    if (fits(v)) {
      num_ = static_cast<std::int64_t>(v);
    } else {
      assign_i128(v, 1);
    }
  }
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  /// Accepts "p", "p/q", and plain decimals such as "-0.25" or "1e-3".
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] mpq_class to_mpq() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.den_ == b.den_) {
        const i128 n = static_cast<i128>(a.num_) + b.num_;
        if (a.den_ == 1) return from_int(n);
        return from_i128(n, a.den_);
      }
      return from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.den_ == b.den_) {
        const i128 n = static_cast<i128>(a.num_) - b.num_;
        if (a.den_ == 1) return from_int(n);
        return from_i128(n, a.den_);
      }
      return from_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.num_ == 0 || b.num_ == 0) return {};
      if (a.den_ == 1 && b.den_ == 1) return from_int(static_cast<i128>(a.num_) * b.num_);
      const std::int64_t g1 = gcd64(a.num_, b.den_);
      const std::int64_t g2 = gcd64(b.num_, a.den_);
      return from_reduced(static_cast<i128>(a.num_ / g1) * (b.num_ / g2),
                          static_cast<i128>(a.den_ / g2) * (b.den_ / g1));
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r(*this);
    if (r.big_)
      *r.big_ = -*r.big_;
    else
      r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a value that fits is never stored big
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b)));
  }
  static bool fits(i128 v) { return v > INT64_MIN && v <= INT64_MAX; }
  static Rational from_int(i128 n) {
    Rational r;
    if (fits(n)) {
      r.num_ = static_cast<std::int64_t>(n);
    } else {
      r.assign_i128(n, 1);
    }
    return r;
  }
  // n/d with d > 0 and gcd(n, d) = 1 already.
  static Rational from_reduced(i128 n, i128 d) {
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
    } else {
      r.assign_i128(n, d);
    }
    return r;
  }
  static Rational from_i128(i128 n, i128 d);
  static Rational from_mpq(mpq_class q);
  void assign_i128(i128 n, i128 d);

  std::int64_t num_{0};
  std::int64_t den_{1};
  std::unique_ptr<mpq_class> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational pow(const Rational& base, unsigned exponent);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double d) { return d == 0.0; }
inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double d) { return d; }

}  // namespace jordanaff
