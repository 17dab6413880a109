#include "srgb/srg_params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace srgb {

void EdgeRegularParams::validate() const {
  if (v < 2) throw DomainError("edge-regular parameters need v >= 2");
  if (k <= 0 || k > v - 1) throw DomainError("edge-regular parameters need 0 < k <= v-1");
  if (lambda < 0 || lambda > k - 1)
    throw DomainError("edge-regular parameters need 0 <= lambda <= k-1");
}

void SrgParams::validate() const {
  edge_regular().validate();
  if (mu < 0) throw DomainError("mu must be nonnegative");
  if (k > v - 2) throw DomainError("strongly regular graphs are non-complete: k <= v-2");
  if ((v - k - 1) * mu != k * (k - lambda - 1))
    throw DomainError("counting identity (v-k-1)mu = k(k-lambda-1) fails for " +
                      to_string(*this));
}

std::string_view to_string(SrgType t) {
  switch (t) {
    case SrgType::TypeIOnly: return "I";
    case SrgType::TypeIIOnly: return "II";
    case SrgType::Both: return "I+II";
  }
  return "?";
}

std::string_view to_string(FeasibilityLevel level) {
  switch (level) {
    case FeasibilityLevel::Counting: return "counting";
    case FeasibilityLevel::Integrality: return "integrality";
    case FeasibilityLevel::Krein: return "krein";
    case FeasibilityLevel::AbsoluteBound: return "absolute";
  }
  return "?";
}

FeasibilityLevel parse_feasibility_level(std::string_view name) {
  if (name == "counting") return FeasibilityLevel::Counting;
  if (name == "integrality") return FeasibilityLevel::Integrality;
  if (name == "krein") return FeasibilityLevel::Krein;
  if (name == "absolute" || name == "absolute-bound") return FeasibilityLevel::AbsoluteBound;
  throw DomainError("unknown feasibility level '" + std::string(name) + "'");
}

bool conference_parameters(const SrgParams& p) {
  return 2 * p.k == p.v - 1 && 4 * p.lambda == p.v - 5 && 4 * p.mu == p.v - 1;
}

std::int64_t discriminant(const SrgParams& p) {
  std::int64_t t = p.lambda - p.mu;
  return t * t + 4 * (p.k - p.mu);
}

SrgType classify(const SrgParams& p) {
  bool type_two = is_perfect_square(BigInt(discriminant(p)));
  bool type_one = conference_parameters(p);
  if (type_one && type_two) return SrgType::Both;
  return type_one ? SrgType::TypeIOnly : SrgType::TypeIIOnly;
}

Spectrum spectrum(const SrgParams& p) {
  std::int64_t disc = discriminant(p);
  if (disc < 0) throw DomainError("infeasible parameters: negative discriminant for " + to_string(p));
  Spectrum out;
  QuadExt root = QuadExt::sqrt(static_cast<std::uint64_t>(disc));
  QuadExt half_trace(Rational(p.lambda - p.mu, 2));
  out.r = half_trace + root * QuadExt(Rational(1, 2));
  out.s = half_trace - root * QuadExt(Rational(1, 2));
  out.type = classify(p);

  if (out.r.is_rational() && out.r != out.s) {
    Rational spread = out.r.rational_part() - out.s.rational_part();
    Rational shift = Rational(2 * p.k + (p.v - 1) * (p.lambda - p.mu)) / spread;
    out.f = (Rational(p.v - 1) - shift) / 2;
    out.g = (Rational(p.v - 1) + shift) / 2;
  } else if (!out.r.is_rational() && conference_parameters(p)) {
    out.f = Rational(p.v - 1, 2);
    out.g = Rational(p.v - 1, 2);
  }
  return out;
}

SrgParams complement(const SrgParams& p) {
  if (!p.connected())
    throw DomainError("complement: " + to_string(p) + " is disconnected (mu = 0)");
  if (!p.co_connected())
    throw DomainError("complement: " + to_string(p) +
                      " is complete multipartite (v-2k+lambda = 0)");
  return {p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda};
}

ParamSlack params_bounds_check(const SrgParams& p) {
  return {p.v - 2 * p.k + p.lambda, p.k - p.lambda - 1};
}

bool is_sum_of_two_squares(std::int64_t v) {
  if (v < 0) return false;
  for (std::int64_t a = 0; 2 * a * a <= v; ++a) {
    if (is_perfect_square(BigInt(v - a * a))) return true;
  }
  return false;
}

namespace {

FeasibilityResult fail(std::string why) { return {false, std::move(why)}; }

bool nonneg_integer(const std::optional<Rational>& q) {
  return q && boost::multiprecision::denominator(*q) == 1 && *q >= 0;
}

}  // namespace

FeasibilityResult is_feasible(const SrgParams& p, FeasibilityLevel level) {
  // Counting.
  if (p.v < 2 || p.k < 1) return fail("positivity");
  if (p.k > p.v - 2) return fail("non-complete k <= v-2");
  if (p.mu < 0 || p.mu > p.k) return fail("0 <= mu <= k");
  if (p.lambda < 0 || p.lambda > p.k - 1) return fail("0 <= lambda <= k-1");
  if ((p.v - p.k - 1) * p.mu != p.k * (p.k - p.lambda - 1)) return fail("counting identity");
  ParamSlack slack = params_bounds_check(p);
  if (slack.v2k_lambda < 0) return fail("v-2k+lambda >= 0");
  if (slack.k_lambda_1 < 0) return fail("k-lambda-1 >= 0");
  if (level == FeasibilityLevel::Counting) return {};

  // Integrality.
  Spectrum sp = spectrum(p);
  if (sp.r.is_rational()) {
    if (sp.r == sp.s) return fail("distinct eigenvalues");
    if (!nonneg_integer(sp.f) || !nonneg_integer(sp.g)) return fail("multiplicity integrality");
  } else {
    if (!conference_parameters(p)) return fail("multiplicity integrality");
    if (!is_sum_of_two_squares(p.v)) return fail("conference v is a sum of two squares");
  }
  if (level == FeasibilityLevel::Integrality) return {};

  // Krein conditions.
  const QuadExt& r = sp.r;
  const QuadExt& s = sp.s;
  QuadExt k(p.k);
  QuadExt one(1), two(2);
  if ((r + one) * (k + r + two * r * s) > (k + r) * (s + one) * (s + one))
    return fail("Krein condition K1");
  if ((s + one) * (k + s + two * r * s) > (k + s) * (r + one) * (r + one))
    return fail("Krein condition K2");
  if (level == FeasibilityLevel::Krein) return {};

  // Absolute bound; only meaningful for primitive graphs.
  if (p.primitive()) {
    Rational v(p.v);
    if (*sp.f > 0 && v > *sp.f * (*sp.f + 3) / 2) return fail("absolute bound (f)");
    if (*sp.g > 0 && v > *sp.g * (*sp.g + 3) / 2) return fail("absolute bound (g)");
  }
  return {};
}

ParsedTuple parse_tuple(std::string_view text) {
  std::vector<std::int64_t> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw DomainError("cannot parse parameter tuple '" + std::string(text) + "'");
    nums.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i])))
      throw DomainError("cannot parse parameter tuple '" + std::string(text) + "'");
  }
  if (nums.size() != 3 && nums.size() != 4)
    throw DomainError("expected 3 or 4 integers, got " + std::to_string(nums.size()));
  ParsedTuple out{{nums[0], nums[1], nums[2]}, std::nullopt};
  if (nums.size() == 4) out.mu = nums[3];
  return out;
}

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

void to_json(nlohmann::json& j, const SrgParams& p) {
  j = nlohmann::json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

void from_json(const nlohmann::json& j, SrgParams& p) {
  j.at("v").get_to(p.v);
  j.at("k").get_to(p.k);
  j.at("lambda").get_to(p.lambda);
  j.at("mu").get_to(p.mu);
}

}  // namespace srgb
