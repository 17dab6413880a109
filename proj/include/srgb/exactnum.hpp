#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace srgb {

// Expression templates off: lambdas and auto returning `a * b` would otherwise
// hold references to temporaries.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Raised when an operation is applied outside its mathematical domain
/// (mixed radicands, degenerate parameter tuples, bad graph sizes, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer helpers.

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);
/// Floor division rounding toward negative infinity; b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

int sign_of(const Rational& x);
BigInt floor_of(const Rational& x);
Rational frac_of(const Rational& x);

/// Splits n > 0 into s^2 * f with f square-free. Returns {s, f}.
std::pair<std::uint64_t, std::uint64_t> split_square_factor(std::uint64_t n);

/// An exact element a + b*sqrt(d) of Q(sqrt(d)) with d square-free.
///
/// Pure rationals are stored with b = 0 and d = 0, so a perfect-square
/// radicand always collapses to the rational part. Values from different
/// quadratic fields only mix when one of them is rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a);  // NOLINT(google-explicit-constructor)
  QuadExt(std::int64_t a) : QuadExt(Rational(a)) {}  // NOLINT
  QuadExt(int a) : QuadExt(Rational(a)) {}  // NOLINT

  /// Canonical form of a + b*sqrt(d0).
  static QuadExt normalize(Rational a, Rational b, std::uint64_t d0);
  /// sqrt(n) for n >= 0.
  static QuadExt sqrt(std::uint64_t n) { return normalize(0, 1, n); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  std::uint64_t radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }

  QuadExt conjugate() const;
  /// Field norm a^2 - b^2 d.
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Real order. Throws DomainError for values in different fields.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  /// Exact rendering, e.g. "-1/2 + 1/2*sqrt(17)".
  std::string to_string() const;
  /// Display only; never used for decisions.
  double to_double() const;

 private:
  QuadExt(Rational a, Rational b, std::uint64_t d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  Rational a_{0};
  Rational b_{0};
  std::uint64_t d_ = 0;
};

int sign_of(const QuadExt& x);
BigInt floor_of(const QuadExt& x);
QuadExt frac_of(const QuadExt& x);

/// base + coeff*sqrt(radicand), where base lives in a possibly different
/// quadratic field. Only needs an exact sign, so no arithmetic is offered.
struct MixedQuad {
  QuadExt base;
  Rational coeff{0};
  std::uint64_t radicand = 0;

  std::string to_string() const;
  double to_double() const;
};

int sign_of(const MixedQuad& x);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace srgb
