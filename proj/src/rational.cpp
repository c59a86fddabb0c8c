#include "jordanaff/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace jordanaff {
namespace {

using i128 = Rational::i128;
using u128 = Rational::u128;

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_i64(const mpz_class& z) {
  // Excludes INT64_MIN so that negation stays on the inline path.
  static const mpz_class lo("-9223372036854775807");
  static const mpz_class hi("9223372036854775807");
  return z >= lo && z <= hi;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
  // mpz_get_si is only guaranteed for long; long is 64 bits on supported targets.
  static_assert(sizeof(long) == 8, "64-bit long required");
  return z.get_si();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

void Rational::assign_i128(i128 n, i128 d) {
  num_ = 0;
  den_ = 1;
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  q.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {};
  const u128 g = gcd_u128(n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  return from_reduced(n, d);
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  if (mpz_fits_i64(q.get_num()) && mpz_fits_i64(q.get_den())) {
    r.num_ = mpz_to_i64(q.get_num());
    r.den_ = mpz_to_i64(q.get_den());
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i128(num_), mpz_from_i128(den_));
  return q;
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  if (den_ == 1) return static_cast<double>(num_);
  return to_mpq().get_d();
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return {};
    const std::int64_t g1 = Rational::gcd64(a.num_, b.num_ < 0 ? -b.num_ : b.num_);
    const std::int64_t g2 = Rational::gcd64(a.den_, b.den_);
    i128 n = static_cast<i128>(a.num_ / g1) * (b.den_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.num_ / g1);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational::from_reduced(n, d);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");

  if (s.find('/') != std::string::npos) {
    mpq_class q;
    const std::string body = s[0] == '+' ? s.substr(1) : s;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("Rational: malformed '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return from_mpq(q);
  }

  // Decimal with optional fraction and exponent, converted exactly.
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("Rational: malformed '" + s + "'");
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("Rational: malformed '" + s + "'");
    ++i;
    std::size_t used = 0;
    try {
      exp10 = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: malformed exponent in '" + s + "'");
    }
    if (i + used != s.size()) throw std::invalid_argument("Rational: malformed '" + s + "'");
  }
  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  const long shift = exp10 - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(mant, p10) : mpq_class(mant * p10);
  q.canonicalize();
  return from_mpq(q);
}

}  // namespace jordanaff
