#include "srgb/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace srgb {

MPoly MPoly::constant(std::size_t arity, const Rational& c) {
  MPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw DomainError("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(e);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

int MPoly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

void MPoly::check_arity(const MPoly& q) const {
  if (arity_ != q.arity_)
    throw DomainError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                      std::to_string(q.arity_));
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != arity_) throw DomainError("exponent vector has wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& q) {
  check_arity(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& q) {
  check_arity(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& p, const MPoly& q) {
  p.check_arity(q);
  MPoly out(p.arity_);
  Exponents e(p.arity_);
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& q) { return *this = *this * q; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly out = constant(arity_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1U) out *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw DomainError("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) term *= point[i];
    total += term;
  }
  return total;
}

Exponents MPoly::common_monomial() const {
  if (terms_.empty()) return Exponents(arity_, 0);
  Exponents out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) out[i] = std::min(out[i], e[i]);
  return out;
}

MPoly MPoly::divide_monomial(const Exponents& d) const {
  MPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents q = e;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (q[i] < d[i]) throw DomainError("monomial does not divide polynomial");
      q[i] -= d[i];
    }
    out.terms_.emplace(std::move(q), c);
  }
  return out;
}

std::string MPoly::to_string(std::span<const std::string_view> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool unit = true;
    for (unsigned x : e) unit = unit && x == 0;
    if (mag != 1 || unit) {
      os << boost::multiprecision::numerator(mag);
      if (boost::multiprecision::denominator(mag) != 1)
        os << '/' << boost::multiprecision::denominator(mag);
      if (!unit) os << '*';
    }
    bool need_star = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << (i < names.size() ? names[i] : std::string_view("x?"));
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// PolyFraction -------------------------------------------------------------

bool PolyFraction::is_polynomial() const {
  return std::all_of(den.begin(), den.end(), [](unsigned x) { return x == 0; });
}

PolyFraction& PolyFraction::reduce() {
  if (num.is_zero()) {
    std::fill(den.begin(), den.end(), 0U);
    return *this;
  }
  Exponents common = num.common_monomial();
  for (std::size_t i = 0; i < den.size(); ++i) common[i] = std::min(common[i], den[i]);
  num = num.divide_monomial(common);
  for (std::size_t i = 0; i < den.size(); ++i) den[i] -= common[i];
  return *this;
}

PolyFraction PolyFraction::divided_by_variable(std::size_t index, unsigned power) const {
  PolyFraction out = *this;
  out.den.at(index) += power;
  return out.reduce();
}

Rational PolyFraction::evaluate(std::span<const Rational> point) const {
  Rational d = 1;
  for (std::size_t i = 0; i < den.size(); ++i)
    for (unsigned j = 0; j < den[i]; ++j) d *= point[i];
  if (d == 0) throw ArithmeticError("evaluation at a pole");
  return num.evaluate(point) / d;
}

namespace {

// Rewrites a and b over the common denominator lcm(a.den, b.den).
std::pair<MPoly, MPoly> align(const PolyFraction& a, const PolyFraction& b, Exponents& den) {
  den.assign(a.den.size(), 0);
  Exponents ua(a.den.size()), ub(a.den.size());
  for (std::size_t i = 0; i < den.size(); ++i) {
    den[i] = std::max(a.den[i], b.den[i]);
    ua[i] = den[i] - a.den[i];
    ub[i] = den[i] - b.den[i];
  }
  return {a.num * MPoly::monomial(ua), b.num * MPoly::monomial(ub)};
}

}  // namespace

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  Exponents den;
  auto [x, y] = align(a, b, den);
  PolyFraction out(x + y, den);
  return out.reduce();
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
  Exponents den;
  auto [x, y] = align(a, b, den);
  PolyFraction out(x - y, den);
  return out.reduce();
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  Exponents den(a.den.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = a.den[i] + b.den[i];
  PolyFraction out(a.num * b.num, den);
  return out.reduce();
}

}  // namespace srgb
