#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srgb/exactnum.hpp"

namespace srgb {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(std::size_t arity = 0) : arity_(arity) {}

  static MPoly constant(std::size_t arity, const Rational& c);
  static MPoly variable(std::size_t arity, std::size_t index);
  static MPoly monomial(const Exponents& e, const Rational& c = 1);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& q);
  MPoly& operator-=(const MPoly& q);
  MPoly& operator*=(const MPoly& q);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
  friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }
  friend MPoly operator*(const MPoly& p, const MPoly& q);
  friend MPoly operator*(MPoly p, const Rational& c) { return p *= c; }
  friend MPoly operator*(const Rational& c, MPoly p) { return p *= c; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned n) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Exponents shared by every term (componentwise minimum).
  Exponents common_monomial() const;
  /// Divides every term by x^e; e must divide each term.
  MPoly divide_monomial(const Exponents& e) const;

  std::string to_string(std::span<const std::string_view> names) const;

 private:
  void check_arity(const MPoly& q) const;

  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

/// num / x^den: a polynomial over a monomial denominator. This is all the
/// division the CAP identities need, since they only divide by s and mu.
struct PolyFraction {
  MPoly num;
  Exponents den;

  explicit PolyFraction(MPoly p) : num(std::move(p)), den(num.arity(), 0) {}
  PolyFraction(MPoly p, Exponents d) : num(std::move(p)), den(std::move(d)) {}

  std::size_t arity() const { return num.arity(); }
  bool is_polynomial() const;
  /// Cancels the largest monomial dividing both numerator and denominator.
  PolyFraction& reduce();
  PolyFraction divided_by_variable(std::size_t index, unsigned power = 1) const;
  Rational evaluate(std::span<const Rational> point) const;

  PolyFraction operator-() const { return {-num, den}; }
  friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
};

}  // namespace srgb
