#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "srgb/exactnum.hpp"

namespace srgb {

/// (v, k, lambda) of an edge-regular graph.
struct EdgeRegularParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;

  /// Throws DomainError unless v >= 2, 0 < k <= v-1, 0 <= lambda <= k-1.
  void validate() const;
  friend bool operator==(const EdgeRegularParams&, const EdgeRegularParams&) = default;
};

/// (v, k, lambda, mu) of a strongly regular graph. Construction does not
/// validate; use is_feasible() or validate().
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  EdgeRegularParams edge_regular() const { return {v, k, lambda}; }
  /// Throws DomainError unless k <= v-2 and (v-k-1) mu = k (k-lambda-1).
  void validate() const;

  bool connected() const { return mu > 0; }
  bool co_connected() const { return v - 2 * k + lambda > 0; }
  bool primitive() const { return connected() && co_connected(); }

  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

enum class SrgType { TypeIOnly, TypeIIOnly, Both };

std::string_view to_string(SrgType t);
inline bool is_type_one(SrgType t) { return t != SrgType::TypeIIOnly; }
inline bool is_type_two(SrgType t) { return t != SrgType::TypeIOnly; }

/// Eigenvalues r >= s besides k, with multiplicities when determined.
struct Spectrum {
  QuadExt r;
  QuadExt s;
  std::optional<Rational> f;  // multiplicity of r
  std::optional<Rational> g;  // multiplicity of s
  SrgType type = SrgType::TypeIIOnly;
};

/// Cumulative feasibility levels: each one implies every earlier one.
enum class FeasibilityLevel { Counting, Integrality, Krein, AbsoluteBound };

std::string_view to_string(FeasibilityLevel level);
/// Accepts "counting", "integrality", "krein", "absolute" (or "absolute-bound").
FeasibilityLevel parse_feasibility_level(std::string_view name);

struct FeasibilityResult {
  bool feasible = true;
  std::string failed;  // name of the first failing constraint

  explicit operator bool() const { return feasible; }
};

struct ParamSlack {
  std::int64_t v2k_lambda = 0;  // v - 2k + lambda; 0 iff complete multipartite
  std::int64_t k_lambda_1 = 0;  // k - lambda - 1; 0 iff complement is
};

/// Conference-graph parameter identities k=(v-1)/2, lambda=(v-5)/4, mu=(v-1)/4.
bool conference_parameters(const SrgParams& p);
/// Discriminant (lambda-mu)^2 + 4(k-mu) of x^2 - (lambda-mu)x - (k-mu).
std::int64_t discriminant(const SrgParams& p);

/// r, s are the roots of x^2 - (lambda-mu)x - (k-mu). Multiplicities come
/// from the trace identities 1 + f + g = v and k + f r + g s = 0:
///   f, g = ((v-1) -/+ (2k + (v-1)(lambda-mu)) / (r-s)) / 2,
/// or (v-1)/2 each for conference parameters with irrational eigenvalues.
Spectrum spectrum(const SrgParams& p);
SrgType classify(const SrgParams& p);

/// (v, v-k-1, v-2k+mu-2, v-2k+lambda). Requires connected and co-connected.
SrgParams complement(const SrgParams& p);

FeasibilityResult is_feasible(const SrgParams& p, FeasibilityLevel level);
ParamSlack params_bounds_check(const SrgParams& p);

/// v is a sum of two integer squares.
bool is_sum_of_two_squares(std::int64_t v);

/// Parses "v,k,l,m" / "v k l m" (3 or 4 integers).
struct ParsedTuple {
  EdgeRegularParams edge;
  std::optional<std::int64_t> mu;
};
ParsedTuple parse_tuple(std::string_view text);

std::string to_string(const SrgParams& p);

void to_json(nlohmann::json& j, const SrgParams& p);
void from_json(const nlohmann::json& j, SrgParams& p);

}  // namespace srgb
