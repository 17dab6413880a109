#pragma once

#include <cstdint>
#include <optional>

#include "srgb/exactnum.hpp"
#include "srgb/srg_params.hpp"

namespace srgb {

/// Clique adjacency polynomial of an edge-regular (v, k, lambda) graph:
///   C(x, y) = x(x+1)(v-y) - 2xy(k-y+1) + y(y-1)(lambda-y+2).
/// Generic over the integer/rational scalar; callers choose the width.
template <class Scalar>
Scalar clique_adjacency(const Scalar& v, const Scalar& k, const Scalar& lambda,
                        const Scalar& x, const Scalar& y) {
  return x * (x + 1) * (v - y) - 2 * x * y * (k - y + 1) +
         y * (y - 1) * (lambda - y + 2);
}

/// Exact C(x, y). Uses a 128-bit path when every input is below 2^30.
BigInt cap_eval(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t x,
                std::int64_t y);
inline BigInt cap_eval(const EdgeRegularParams& p, std::int64_t x, std::int64_t y) {
  return cap_eval(p.v, p.k, p.lambda, x, y);
}

struct CapMinimum {
  std::int64_t b = 0;
  BigInt value;
};

/// min over integers b of C(b, y). C is a convex quadratic in x for y < v, so
/// only the two integers flanking the real vertex are evaluated; ties go to
/// the smaller b. Throws DomainError for y >= v.
CapMinimum cap_min_over_b(const EdgeRegularParams& p, std::int64_t y);
/// Brute-force minimum over b in [lo, hi]; a cross-check for cap_min_over_b.
CapMinimum cap_min_over_range(const EdgeRegularParams& p, std::int64_t y, std::int64_t lo,
                              std::int64_t hi);

struct CabWitness {
  std::int64_t b = 0;
  std::int64_t c_plus_1 = 0;
  BigInt value;  // C(b, c+1) < 0
};

struct CabResult {
  std::int64_t bound = 0;
  CabWitness witness;
};

/// Least c >= 2 with C(b, c+1) < 0 for some integer b. Always <= lambda + 2.
CabResult cab(const EdgeRegularParams& p);

std::int64_t trivial_bound(const EdgeRegularParams& p);

/// 1 - k/s before flooring. Requires a connected tuple.
QuadExt delsarte_value(const SrgParams& p);
/// floor(1 - k/s); lambda + 2 for disconnected tuples (mu = 0).
std::int64_t delsarte_bound(const SrgParams& p);
/// floor(1 - k/s) for an arbitrary regular graph with least eigenvalue s < 0.
std::int64_t delsarte_bound(std::int64_t k, const QuadExt& least_eigenvalue);

/// v / (1 - kbar/sbar) before flooring.
QuadExt hoffman_clique_value(std::int64_t v, std::int64_t k_bar, const QuadExt& s_bar);
/// Ratio bound on the complement's independence number, i.e. a clique bound.
std::int64_t hoffman_clique_bound(std::int64_t v, std::int64_t k_bar, const QuadExt& s_bar);

struct TheoremCheck {
  bool applies = false;
  /// Upper end of the open interval the fractional part must fall into.
  MixedQuad threshold;
  /// The fractional part being tested.
  QuadExt fractional;
};

/// Conference case: 0 < frc(sqrt(v)/2) < 1/4 + (sqrt(v) - sqrt(v+5/4))/2.
/// Requires v = 1 mod 4 and v >= 5.
TheoremCheck thm21_applies(std::int64_t v);
/// Integer-only form of the same test: 4v+5 < (4 floor(sqrt(v)/2) + 1)^2.
bool thm21_applies_integer(std::int64_t v);

/// Integral-eigenvalue case: 0 < frc(-k/s) < 1 - (r^2+r)/(v-2k+lambda).
/// Requires type II and co-connected.
TheoremCheck thm22_applies(const SrgParams& p);

/// floor(sqrt(v) - 1) or floor(-k/s) when the matching hypothesis holds,
/// never above the Delsarte bound.
std::optional<std::int64_t> improved_bound(const SrgParams& p);

/// lambda + 1 <= -k/s, decided exactly.
bool thm51_predicate(const SrgParams& p);

/// C(floor(-mu/s), floor(2-k/s)); negative for every SRG.
BigInt delsarte_point_value(const SrgParams& p);

struct BoundsReport {
  SrgParams params;
  bool has_mu = true;
  SrgType type = SrgType::TypeIIOnly;
  std::int64_t cab = 0;
  CabWitness cab_witness;
  std::optional<std::int64_t> delsarte;
  bool delsarte_degenerate = false;
  std::int64_t trivial = 0;
  std::optional<std::int64_t> hoffman_complement;
  bool thm21 = false;
  bool thm22 = false;
  bool thm51 = false;
  std::optional<MixedQuad> thm_threshold;
  std::optional<std::int64_t> improved;
};

/// Thrown when a computed report breaks a proven inequality.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every bound for one SRG tuple. Validates the tuple first.
BoundsReport full_report(const SrgParams& p);
/// CAB and trivial bound only.
BoundsReport edge_regular_report(const EdgeRegularParams& p);

nlohmann::ordered_json to_json(const BoundsReport& r);

}  // namespace srgb
