#include "srgb/exactnum.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace srgb {

namespace mp = boost::multiprecision;

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  return mp::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = mp::sqrt(n);
  return r * r == n;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ArithmeticError("division by zero");
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int sign_of(const Rational& x) { return x.sign(); }

BigInt floor_of(const Rational& x) {
  return floor_div(mp::numerator(x), mp::denominator(x));
}

Rational frac_of(const Rational& x) { return x - Rational(floor_of(x)); }

std::pair<std::uint64_t, std::uint64_t> split_square_factor(std::uint64_t n) {
  std::uint64_t outside = 1;
  std::uint64_t inside = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) inside *= p;
  }
  inside *= n;  // leftover prime factor (or 1)
  return {outside, inside};
}

// QuadExt ------------------------------------------------------------------

QuadExt::QuadExt(Rational a) : a_(std::move(a)) {}

QuadExt QuadExt::normalize(Rational a, Rational b, std::uint64_t d0) {
  if (b == 0 || d0 == 0) return QuadExt(std::move(a));
  auto [outside, inside] = split_square_factor(d0);
  b *= outside;
  if (inside == 1) return QuadExt(a + b);
  return QuadExt(std::move(a), std::move(b), inside);
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, d_); }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

namespace {

std::uint64_t common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw DomainError("mixed radicands sqrt(" + std::to_string(x.radicand()) +
                    ") and sqrt(" + std::to_string(y.radicand()) + ")");
}

}  // namespace

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  std::uint64_t d = common_radicand(*this, y);
  *this = normalize(a_ + y.a_, b_ + y.b_, d);
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) {
  std::uint64_t d = common_radicand(*this, y);
  *this = normalize(a_ - y.a_, b_ - y.b_, d);
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  std::uint64_t d = common_radicand(*this, y);
  Rational a = a_ * y.a_ + b_ * y.b_ * d;
  Rational b = a_ * y.b_ + b_ * y.a_;
  *this = normalize(std::move(a), std::move(b), d);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  if (y.is_zero()) throw ArithmeticError("QuadExt division by zero");
  common_radicand(*this, y);
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  Rational n = y.norm();
  *this *= y.conjugate();
  *this = normalize(a_ / n, b_ / n, d_);
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  int s = sign_of(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << mp::numerator(q);
  if (mp::denominator(q) != 1) os << '/' << mp::denominator(q);
  return os.str();
}

}  // namespace

std::string QuadExt::to_string() const {
  if (is_rational()) return rational_string(a_);
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  std::string term = mag == 1 ? surd : rational_string(mag) + "*" + surd;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + term;
  return rational_string(a_) + (b_ < 0 ? " - " : " + ") + term;
}

double QuadExt::to_double() const {
  return a_.convert_to<double>() +
         b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.to_string();
}

int sign_of(const QuadExt& x) {
  int sa = sign_of(x.rational_part());
  int sb = sign_of(x.surd_coeff());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins. a^2 == b^2 d is impossible
  // for square-free d > 1 and nonzero a, b.
  Rational lhs = x.rational_part() * x.rational_part();
  Rational rhs = x.surd_coeff() * x.surd_coeff() * x.radicand();
  return lhs > rhs ? sa : sb;
}

BigInt floor_of(const QuadExt& x) {
  if (x.is_rational()) return floor_of(x.rational_part());
  // |b| sqrt(d) = sqrt(p^2 d) / q lies in [m/q, (m+1)/q) with m = isqrt(p^2 d).
  const Rational& b = x.surd_coeff();
  BigInt p = mp::abs(mp::numerator(b));
  BigInt q = mp::denominator(b);
  BigInt m = isqrt(p * p * x.radicand());
  Rational approx = x.rational_part() + Rational(b.sign() * m, q);
  BigInt n = floor_of(approx);
  // The guess is within one of the answer; certify n <= x < n + 1.
  while (sign_of(x - QuadExt(Rational(n))) < 0) --n;
  while (sign_of(x - QuadExt(Rational(n + 1))) >= 0) ++n;
  return n;
}

QuadExt frac_of(const QuadExt& x) { return x - QuadExt(Rational(floor_of(x))); }

// MixedQuad ----------------------------------------------------------------

int sign_of(const MixedQuad& x) {
  QuadExt extra = QuadExt::normalize(0, x.coeff, x.radicand);
  if (x.base.is_rational() || extra.is_rational() ||
      x.base.radicand() == extra.radicand())
    return sign_of(x.base + extra);
  int sx = sign_of(x.base);
  int sy = sign_of(extra.surd_coeff());
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Compare base^2 (in its own field) with the rational square of the surd.
  QuadExt gap = x.base * x.base - QuadExt(extra.surd_coeff() * extra.surd_coeff() *
                                           extra.radicand());
  int g = sign_of(gap);
  if (g == 0) return 0;
  return g > 0 ? sx : sy;
}

std::string MixedQuad::to_string() const {
  if (coeff == 0 || radicand == 0) return base.to_string();
  QuadExt extra = QuadExt::normalize(0, coeff, radicand);
  std::string tail = extra.to_string();
  if (tail.front() == '-') return base.to_string() + " - " + tail.substr(1);
  return base.to_string() + " + " + tail;
}

double MixedQuad::to_double() const {
  return base.to_double() +
         coeff.convert_to<double>() * std::sqrt(static_cast<double>(radicand));
}

}  // namespace srgb
