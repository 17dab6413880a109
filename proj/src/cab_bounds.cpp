#include "srgb/cab_bounds.hpp"

#include <algorithm>
#include <cstdlib>

namespace srgb {

namespace {

constexpr std::int64_t kFastLimit = std::int64_t{1} << 30;

bool small(std::int64_t a) { return a > -kFastLimit && a < kFastLimit; }

BigInt from_int128(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                            : static_cast<unsigned __int128>(x);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

Rational as_rational(const QuadExt& x) {
  if (!x.is_rational()) throw DomainError("expected a rational value, got " + x.to_string());
  return x.rational_part();
}

std::int64_t to_i64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

BigInt cap_eval(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t x,
                std::int64_t y) {
  if (small(v) && small(k) && small(lambda) && small(x) && small(y)) {
    return from_int128(clique_adjacency<__int128>(v, k, lambda, x, y));
  }
  return clique_adjacency<BigInt>(v, k, lambda, x, y);
}

CapMinimum cap_min_over_b(const EdgeRegularParams& p, std::int64_t y) {
  if (y >= p.v)
    throw DomainError("cap_min_over_b needs y < v (leading coefficient v-y must be positive)");
  // C(x, y) = A x^2 + B x + const with A = v-y, B = (v-y) - 2y(k-y+1).
  BigInt a = p.v - y;
  BigInt b = a - BigInt(2) * y * (p.k - y + 1);
  std::int64_t lo = to_i64(floor_div(-b, 2 * a));
  BigInt at_lo = cap_eval(p, lo, y);
  BigInt at_hi = cap_eval(p, lo + 1, y);
  if (at_hi < at_lo) return {lo + 1, at_hi};
  return {lo, at_lo};
}

CapMinimum cap_min_over_range(const EdgeRegularParams& p, std::int64_t y, std::int64_t lo,
                              std::int64_t hi) {
  CapMinimum best{lo, cap_eval(p, lo, y)};
  for (std::int64_t b = lo + 1; b <= hi; ++b) {
    BigInt value = cap_eval(p, b, y);
    if (value < best.value) best = {b, std::move(value)};
  }
  return best;
}

CabResult cab(const EdgeRegularParams& p) {
  p.validate();
  for (std::int64_t c = 2;; ++c) {
    std::int64_t y = c + 1;
    if (y < p.v) {
      CapMinimum m = cap_min_over_b(p, y);
      if (m.value < 0) return {c, {m.b, y, std::move(m.value)}};
    } else if (y > p.lambda + 2) {
      // Only reachable for complete graphs; C(0, y) < 0 once y > lambda + 2.
      return {c, {0, y, cap_eval(p, 0, y)}};
    }
  }
}

std::int64_t trivial_bound(const EdgeRegularParams& p) { return p.lambda + 2; }

QuadExt delsarte_value(const SrgParams& p) {
  Spectrum sp = spectrum(p);
  return QuadExt(1) - QuadExt(p.k) / sp.s;
}

std::int64_t delsarte_bound(const SrgParams& p) {
  p.validate();
  if (!p.connected()) return p.lambda + 2;
  return to_i64(floor_of(delsarte_value(p)));
}

std::int64_t delsarte_bound(std::int64_t k, const QuadExt& least_eigenvalue) {
  if (sign_of(least_eigenvalue) >= 0) throw DomainError("Delsarte bound needs s < 0");
  return to_i64(floor_of(QuadExt(1) - QuadExt(k) / least_eigenvalue));
}

QuadExt hoffman_clique_value(std::int64_t v, std::int64_t k_bar, const QuadExt& s_bar) {
  if (sign_of(s_bar) >= 0) throw DomainError("Hoffman bound needs a negative least eigenvalue");
  return QuadExt(v) / (QuadExt(1) - QuadExt(k_bar) / s_bar);
}

std::int64_t hoffman_clique_bound(std::int64_t v, std::int64_t k_bar, const QuadExt& s_bar) {
  return to_i64(floor_of(hoffman_clique_value(v, k_bar, s_bar)));
}

TheoremCheck thm21_applies(std::int64_t v) {
  if (v < 5 || v % 4 != 1) throw DomainError("conference test needs v = 1 mod 4 and v >= 5");
  QuadExt root_v = QuadExt::sqrt(static_cast<std::uint64_t>(v));
  QuadExt half = root_v * QuadExt(Rational(1, 2));
  TheoremCheck out;
  out.fractional = frac_of(half);
  // sqrt(v + 5/4) = sqrt(16v + 20) / 4, so only an integer radicand appears.
  out.threshold = MixedQuad{QuadExt(Rational(1, 4)) + half, Rational(-1, 8),
                            static_cast<std::uint64_t>(16 * v + 20)};
  MixedQuad gap{out.threshold.base - out.fractional, out.threshold.coeff,
                out.threshold.radicand};
  out.applies = sign_of(out.fractional) > 0 && sign_of(gap) > 0;
  return out;
}

bool thm21_applies_integer(std::int64_t v) {
  BigInt root = isqrt(BigInt(v));
  if (root * root == v && root % 2 == 0) return false;  // frc(sqrt(v)/2) = 0
  BigInt m = root / 2;
  BigInt edge = 4 * m + 1;
  return BigInt(4 * v + 5) < edge * edge;
}

TheoremCheck thm22_applies(const SrgParams& p) {
  SrgType type = classify(p);
  if (type == SrgType::TypeIOnly)
    throw DomainError("thm22 test needs integral eigenvalues; " + to_string(p) + " is type I");
  if (!p.co_connected())
    throw DomainError("thm22 test needs a co-connected tuple; " + to_string(p) +
                      " is complete multipartite");
  Spectrum sp = spectrum(p);
  Rational r = as_rational(sp.r);
  Rational s = as_rational(sp.s);
  TheoremCheck out;
  out.fractional = QuadExt(frac_of(Rational(-p.k) / s));
  Rational eta = 1 - (r * r + r) / Rational(p.v - 2 * p.k + p.lambda);
  out.threshold = MixedQuad{QuadExt(eta), 0, 0};
  out.applies = sign_of(out.fractional) > 0 && out.fractional < QuadExt(eta);
  return out;
}

std::optional<std::int64_t> improved_bound(const SrgParams& p) {
  p.validate();
  std::optional<std::int64_t> best;
  auto offer = [&](std::int64_t value) { best = best ? std::min(*best, value) : value; };
  if (conference_parameters(p) && thm21_applies(p.v).applies) {
    offer(to_i64(floor_of(QuadExt::sqrt(static_cast<std::uint64_t>(p.v)) - QuadExt(1))));
  }
  if (is_type_two(classify(p)) && p.co_connected() && thm22_applies(p).applies) {
    Spectrum sp = spectrum(p);
    offer(to_i64(floor_of(QuadExt(-p.k) / sp.s)));
  }
  if (best) best = std::min(*best, delsarte_bound(p));
  return best;
}

bool thm51_predicate(const SrgParams& p) {
  Spectrum sp = spectrum(p);
  return QuadExt(p.lambda + 1) <= QuadExt(-p.k) / sp.s;
}

BigInt delsarte_point_value(const SrgParams& p) {
  Spectrum sp = spectrum(p);
  std::int64_t x = to_i64(floor_of(QuadExt(-p.mu) / sp.s));
  std::int64_t y = to_i64(floor_of(QuadExt(2) - QuadExt(p.k) / sp.s));
  return cap_eval(p.edge_regular(), x, y);
}

BoundsReport edge_regular_report(const EdgeRegularParams& p) {
  BoundsReport out;
  out.params = {p.v, p.k, p.lambda, 0};
  out.has_mu = false;
  CabResult c = cab(p);
  out.cab = c.bound;
  out.cab_witness = std::move(c.witness);
  out.trivial = trivial_bound(p);
  if (out.cab > out.trivial) throw InvariantViolation("CAB exceeds the trivial bound");
  return out;
}

BoundsReport full_report(const SrgParams& p) {
  p.validate();
  BoundsReport out = edge_regular_report(p.edge_regular());
  out.params = p;
  out.has_mu = true;
  out.type = classify(p);
  out.delsarte = delsarte_bound(p);
  out.delsarte_degenerate = !p.connected();

  Spectrum sp = spectrum(p);
  if (p.primitive()) {
    out.hoffman_complement =
        hoffman_clique_bound(p.v, p.v - p.k - 1, -sp.r - QuadExt(1));
  }
  if (conference_parameters(p)) {
    TheoremCheck t = thm21_applies(p.v);
    out.thm21 = t.applies;
    out.thm_threshold = t.threshold;
  }
  if (is_type_two(out.type) && p.co_connected()) {
    TheoremCheck t = thm22_applies(p);
    out.thm22 = t.applies;
    if (!out.thm_threshold || t.applies) out.thm_threshold = t.threshold;
  }
  out.thm51 = thm51_predicate(p);
  out.improved = improved_bound(p);

  if (out.cab > *out.delsarte)
    throw InvariantViolation("CAB exceeds the Delsarte bound for " + to_string(p));
  return out;
}

nlohmann::ordered_json to_json(const BoundsReport& r) {
  using json = nlohmann::ordered_json;
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? json(*x) : json(nullptr); };
  return json{{"v", r.params.v},
              {"k", r.params.k},
              {"lambda", r.params.lambda},
              {"mu", r.has_mu ? json(r.params.mu) : json(nullptr)},
              {"cab", r.cab},
              {"cab_witness_b", r.cab_witness.b},
              {"cab_witness_y", r.cab_witness.c_plus_1},
              {"delsarte", opt(r.delsarte)},
              {"trivial", r.trivial},
              {"thm21", r.thm21},
              {"thm22", r.thm22},
              {"improved", opt(r.improved)}};
}

}  // namespace srgb
