#include "srgb/identities.hpp"

#include <random>

#include "srgb/cab_bounds.hpp"

namespace srgb {

namespace {

std::size_t idx(Sym x) { return static_cast<std::size_t>(x); }

Rational at(const SymPoint& p, Sym x) { return p[idx(x)]; }

}  // namespace

MPoly sym(Sym x) { return MPoly::variable(kSymCount, idx(x)); }
MPoly num(const Rational& c) { return MPoly::constant(kSymCount, c); }
PolyFraction frac(const MPoly& p) { return PolyFraction(p); }

std::string_view to_string(ParamKind kind) {
  switch (kind) {
    case ParamKind::GeneralSRG: return "general-srg";
    case ParamKind::TypeI: return "type-I";
    case ParamKind::Raw: return "raw";
  }
  return "?";
}

// Parameterization ---------------------------------------------------------

Parameterization::Parameterization(ParamKind kind) : kind_(kind) {
  for (Sym x : {Sym::t, Sym::b, Sym::c}) images_[idx(x)] = frac(sym(x));
}

Parameterization Parameterization::raw() {
  Parameterization p(ParamKind::Raw);
  for (std::size_t i = 0; i < kSymCount; ++i)
    p.images_[i] = frac(MPoly::variable(kSymCount, i));
  return p;
}

Parameterization Parameterization::general_srg() {
  Parameterization p(ParamKind::GeneralSRG);
  MPoly mu = sym(Sym::mu), r = sym(Sym::r), s = sym(Sym::s);
  MPoly k = mu - r * s;
  MPoly lambda = mu + r + s;
  for (Sym x : {Sym::mu, Sym::r, Sym::s}) p.images_[idx(x)] = frac(sym(x));
  p.images_[idx(Sym::lambda)] = frac(lambda);
  p.images_[idx(Sym::k)] = frac(k);
  // (v-k-1) mu = k (k-lambda-1) solved for v.
  MPoly v_times_mu = mu * (k + num(1)) + k * (k - lambda - num(1));
  p.images_[idx(Sym::v)] = frac(v_times_mu).divided_by_variable(idx(Sym::mu));
  return p;
}

Parameterization Parameterization::type_one() {
  Parameterization p(ParamKind::TypeI);
  MPoly w = sym(Sym::w);
  MPoly w2 = w * w;
  p.images_[idx(Sym::w)] = frac(w);
  p.images_[idx(Sym::v)] = frac(w2);
  p.images_[idx(Sym::k)] = frac((w2 - num(1)) * Rational(1, 2));
  p.images_[idx(Sym::lambda)] = frac((w2 - num(5)) * Rational(1, 4));
  p.images_[idx(Sym::mu)] = frac((w2 - num(1)) * Rational(1, 4));
  p.images_[idx(Sym::r)] = frac((w - num(1)) * Rational(1, 2));
  p.images_[idx(Sym::s)] = frac((w + num(1)) * Rational(-1, 2));
  return p;
}

bool Parameterization::is_free(Sym x) const {
  const auto& img = images_[idx(x)];
  return img && img->is_polynomial() && img->num == sym(x);
}

const PolyFraction& Parameterization::image(Sym x) const {
  const auto& img = images_[idx(x)];
  if (!img)
    throw DomainError("symbol '" + std::string(kSymNames[idx(x)]) +
                      "' is not defined under the " + std::string(to_string(kind_)) +
                      " parameterization");
  return *img;
}

// Substitution -------------------------------------------------------------

namespace {

PolyFraction substitute_monomial(const Exponents& e, const Parameterization& param) {
  PolyFraction out = frac(num(1));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const PolyFraction& img = param.image(static_cast<Sym>(i));
    for (unsigned j = 0; j < e[i]; ++j) out = out * img;
  }
  return out;
}

}  // namespace

PolyFraction substitute(const PolyFraction& p, const Parameterization& param) {
  PolyFraction out = frac(MPoly(kSymCount));
  for (const auto& [e, c] : p.num.terms()) {
    PolyFraction term = substitute_monomial(e, param);
    term.num *= c;
    out = out + term;
  }
  if (p.is_polynomial()) return out;

  // Divide by the substituted denominator, which must stay a single term.
  PolyFraction den = substitute_monomial(p.den, param);
  if (den.num.size() != 1)
    throw SpecificationError("denominator does not stay monomial under the " +
                             std::string(to_string(param.kind())) + " parameterization");
  const auto& [de, dc] = *den.num.terms().begin();
  PolyFraction inverse(MPoly::monomial(den.den, Rational(1) / dc), de);
  return (out * inverse).reduce();
}

MPoly substitute(const MPoly& p, const Parameterization& param) {
  PolyFraction out = substitute(frac(p), param);
  if (!out.is_polynomial())
    throw SpecificationError("substitution leaves a denominator under the " +
                             std::string(to_string(param.kind())) + " parameterization");
  return out.num;
}

// Verification -------------------------------------------------------------

namespace {

Parameterization param_for(ParamKind kind) {
  switch (kind) {
    case ParamKind::GeneralSRG: return Parameterization::general_srg();
    case ParamKind::TypeI: return Parameterization::type_one();
    case ParamKind::Raw: break;
  }
  return Parameterization::raw();
}

}  // namespace

VerifyResult verify_identity_detailed(const IdentityCase& c) {
  Parameterization param = param_for(c.param);
  PolyFraction clearing(MPoly::monomial(c.clearing));
  PolyFraction lhs = substitute(c.lhs, param) * clearing;
  PolyFraction rhs = substitute(frac(c.rhs), param) * clearing;
  VerifyResult out;
  out.degree = std::max(lhs.num.degree(), rhs.num.degree());
  PolyFraction diff = lhs - rhs;
  if (!diff.is_polynomial())
    throw SpecificationError("identity '" + c.id + "' keeps a denominator after clearing");
  out.residual = diff.num;
  out.zero = diff.num.is_zero();
  return out;
}

bool verify_identity(const IdentityCase& c) { return verify_identity_detailed(c).zero; }

SymPoint random_point(ParamKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-40, 40);
  std::uniform_int_distribution<int> denom(1, 7);
  auto nonzero = [&] {
    for (;;) {
      int n = numer(rng);
      if (n != 0) return Rational(n, denom(rng));
    }
  };
  SymPoint p;
  for (auto& x : p) x = nonzero();
  switch (kind) {
    case ParamKind::GeneralSRG: {
      Rational mu = at(p, Sym::mu), r = at(p, Sym::r), s = at(p, Sym::s);
      Rational k = mu - r * s;
      Rational lambda = mu + r + s;
      p[idx(Sym::k)] = k;
      p[idx(Sym::lambda)] = lambda;
      p[idx(Sym::v)] = (mu * (k + 1) + k * (k - lambda - 1)) / mu;
      break;
    }
    case ParamKind::TypeI: {
      Rational w = at(p, Sym::w);
      p[idx(Sym::v)] = w * w;
      p[idx(Sym::k)] = (w * w - 1) / 2;
      p[idx(Sym::lambda)] = (w * w - 5) / 4;
      p[idx(Sym::mu)] = (w * w - 1) / 4;
      p[idx(Sym::r)] = (w - 1) / 2;
      p[idx(Sym::s)] = -(w + 1) / 2;
      break;
    }
    case ParamKind::Raw: break;
  }
  return p;
}

bool random_point_crosscheck(const IdentityCase& c, int trials, std::uint64_t seed) {
  for (int i = 0; i < trials; ++i) {
    SymPoint p = random_point(c.param, seed + static_cast<std::uint64_t>(i));
    // Poles of the relations themselves; resample rather than divide by zero.
    if (at(p, Sym::s) == 0 || at(p, Sym::mu) == 0) continue;
    Rational lhs = c.lhs_value(p);
    Rational rhs = c.rhs_value(p);
    if (lhs != rhs) return false;
    if (c.lhs.evaluate(p) != lhs || c.rhs.evaluate(p) != rhs) return false;
  }
  return true;
}

IdentityCase mutate_rhs_sign(const IdentityCase& c, std::size_t term) {
  if (term >= c.rhs.size()) throw DomainError("rhs has no term " + std::to_string(term));
  IdentityCase out = c;
  auto it = std::next(c.rhs.terms().begin(), static_cast<std::ptrdiff_t>(term));
  out.rhs.add_term(it->first, -2 * it->second);
  out.id += "~flip" + std::to_string(term);
  return out;
}

// The cases ----------------------------------------------------------------

PolyFraction cap_symbolic(const PolyFraction& x, const PolyFraction& y) {
  PolyFraction v = frac(sym(Sym::v)), k = frac(sym(Sym::k)), lambda = frac(sym(Sym::lambda));
  PolyFraction one = frac(num(1)), two = frac(num(2));
  return x * (x + one) * (v - y) - two * x * y * (k - y + one) +
         y * (y - one) * (lambda - y + two);
}

namespace {

Rational cap_at(const SymPoint& p, const Rational& x, const Rational& y) {
  return clique_adjacency<Rational>(at(p, Sym::v), at(p, Sym::k), at(p, Sym::lambda), x, y);
}

Exponents clearing(unsigned s_power, unsigned mu_power) {
  Exponents e(kSymCount, 0);
  e[idx(Sym::s)] = s_power;
  e[idx(Sym::mu)] = mu_power;
  return e;
}

}  // namespace

std::vector<IdentityCase> shipped_identities() {
  const MPoly t = sym(Sym::t), v = sym(Sym::v), k = sym(Sym::k), lambda = sym(Sym::lambda),
              mu = sym(Sym::mu), r = sym(Sym::r), s = sym(Sym::s), b = sym(Sym::b),
              c = sym(Sym::c);
  const PolyFraction ft = frac(t), fr = frac(r), fb = frac(b), fc = frac(c);
  const PolyFraction minus_mu_over_s = frac(-mu).divided_by_variable(idx(Sym::s));
  const PolyFraction minus_k_over_s = frac(-k).divided_by_variable(idx(Sym::s));
  const MPoly co_slack = v - 2 * k + lambda;  // v - 2k + lambda
  std::vector<IdentityCase> cases;

  {
    IdentityCase ic;
    ic.id = "cap-at-delsarte-point";
    ic.description = "C(-mu/s, 2-k/s) = (2s-r)(r+1)";
    ic.param = ParamKind::GeneralSRG;
    ic.lhs = cap_symbolic(minus_mu_over_s, frac(num(2)) + minus_k_over_s);
    ic.rhs = (2 * s - r) * (r + num(1));
    ic.clearing = clearing(3, 0);
    ic.lhs_value = [](const SymPoint& p) {
      Rational s = at(p, Sym::s);
      return cap_at(p, -at(p, Sym::mu) / s, 2 - at(p, Sym::k) / s);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), s = at(p, Sym::s);
      return (2 * s - r) * (r + 1);
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "conference-cap-level-3";
    ic.description = "C(r-t, 3+2r-2t) = 2(t-1)(t+s-2)(t+2s)";
    ic.param = ParamKind::TypeI;
    ic.lhs = cap_symbolic(fr - ft, frac(num(3) + 2 * r - 2 * t));
    ic.rhs = 2 * (t - num(1)) * (t + s - num(2)) * (t + 2 * s);
    ic.lhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), t = at(p, Sym::t);
      return cap_at(p, r - t, 3 + 2 * r - 2 * t);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational s = at(p, Sym::s), t = at(p, Sym::t);
      return 2 * (t - 1) * (t + s - 2) * (t + 2 * s);
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "conference-cap-level-2";
    ic.description = "C(r-t, 2+2r-2t) = (t+s)(2t^2+(4s-1)t-3s-1)";
    ic.param = ParamKind::TypeI;
    ic.lhs = cap_symbolic(fr - ft, frac(num(2) + 2 * r - 2 * t));
    ic.rhs = (t + s) * (2 * t * t + (4 * s - num(1)) * t - 3 * s - num(1));
    ic.lhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), t = at(p, Sym::t);
      return cap_at(p, r - t, 2 + 2 * r - 2 * t);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational s = at(p, Sym::s), t = at(p, Sym::t);
      return (t + s) * (2 * t * t + (4 * s - 1) * t - 3 * s - 1);
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "shifted-delsarte-point";
    ic.description = "C(-mu/s-t, 2-k/s-t) = (t-1)((v-2k+lambda)t - (2s-r)(r+1))";
    ic.param = ParamKind::GeneralSRG;
    ic.lhs = cap_symbolic(minus_mu_over_s - ft, frac(num(2)) + minus_k_over_s - ft);
    ic.rhs = (t - num(1)) * (co_slack * t - (2 * s - r) * (r + num(1)));
    ic.clearing = clearing(3, 1);
    ic.lhs_value = [](const SymPoint& p) {
      Rational s = at(p, Sym::s), t = at(p, Sym::t);
      return cap_at(p, -at(p, Sym::mu) / s - t, 2 - at(p, Sym::k) / s - t);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), s = at(p, Sym::s), t = at(p, Sym::t);
      Rational slack = at(p, Sym::v) - 2 * at(p, Sym::k) + at(p, Sym::lambda);
      return (t - 1) * (slack * t - (2 * s - r) * (r + 1));
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "shifted-delsarte-point-lower";
    ic.description = "C(-mu/s-t, 1-k/s-t) = t((v-2k+lambda)(t-1) + r(r+1))";
    ic.param = ParamKind::GeneralSRG;
    ic.lhs = cap_symbolic(minus_mu_over_s - ft, frac(num(1)) + minus_k_over_s - ft);
    ic.rhs = t * (co_slack * (t - num(1)) + r * (r + num(1)));
    ic.clearing = clearing(3, 1);
    ic.lhs_value = [](const SymPoint& p) {
      Rational s = at(p, Sym::s), t = at(p, Sym::t);
      return cap_at(p, -at(p, Sym::mu) / s - t, 1 - at(p, Sym::k) / s - t);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), t = at(p, Sym::t);
      Rational slack = at(p, Sym::v) - 2 * at(p, Sym::k) + at(p, Sym::lambda);
      return t * (slack * (t - 1) + r * (r + 1));
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "complement-threshold-product";
    ic.description = "mu(v-2k+lambda) = (r^2+r)(s^2+s)";
    ic.param = ParamKind::GeneralSRG;
    ic.lhs = frac(mu * co_slack);
    ic.rhs = (r * r + r) * (s * s + s);
    ic.lhs_value = [](const SymPoint& p) {
      return at(p, Sym::mu) * (at(p, Sym::v) - 2 * at(p, Sym::k) + at(p, Sym::lambda));
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational r = at(p, Sym::r), s = at(p, Sym::s);
      return (r * r + r) * (s * s + s);
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "cap-at-one-lambda-plus-2";
    ic.description = "mu C(1, lambda+2) / 2 = k(k-(mu+1)(lambda+1)) + mu(lambda+1)^2";
    ic.param = ParamKind::GeneralSRG;
    ic.lhs = frac(mu * Rational(1, 2)) *
             cap_symbolic(frac(num(1)), frac(lambda + num(2)));
    MPoly l1 = lambda + num(1);
    ic.rhs = k * (k - (mu + num(1)) * l1) + mu * l1 * l1;
    ic.lhs_value = [](const SymPoint& p) {
      return at(p, Sym::mu) * cap_at(p, 1, at(p, Sym::lambda) + 2) / 2;
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational k = at(p, Sym::k), mu = at(p, Sym::mu), l1 = at(p, Sym::lambda) + 1;
      return k * (k - (mu + 1) * l1) + mu * l1 * l1;
    };
    cases.push_back(std::move(ic));
  }
  {
    IdentityCase ic;
    ic.id = "cap-level-monotonicity";
    ic.description =
        "C(b,c) - C(b,lambda+2) = (lambda+2-c)(b-c)(b-c+1) + 2b(lambda+2-c)(k-lambda-1)";
    ic.param = ParamKind::Raw;
    ic.lhs = cap_symbolic(fb, fc) - cap_symbolic(fb, frac(lambda + num(2)));
    MPoly drop = lambda + num(2) - c;
    ic.rhs = drop * (b - c) * (b - c + num(1)) + 2 * b * drop * (k - lambda - num(1));
    ic.lhs_value = [](const SymPoint& p) {
      Rational b = at(p, Sym::b);
      return cap_at(p, b, at(p, Sym::c)) - cap_at(p, b, at(p, Sym::lambda) + 2);
    };
    ic.rhs_value = [](const SymPoint& p) {
      Rational b = at(p, Sym::b), c = at(p, Sym::c), k = at(p, Sym::k),
               lambda = at(p, Sym::lambda);
      Rational drop = lambda + 2 - c;
      return drop * (b - c) * (b - c + 1) + 2 * b * drop * (k - lambda - 1);
    };
    cases.push_back(std::move(ic));
  }
  return cases;
}

}  // namespace srgb
