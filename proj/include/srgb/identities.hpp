#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgb/mpoly.hpp"

namespace srgb {

/// Variable order shared by every identity polynomial.
enum class Sym : std::size_t { t, w, b, c, v, k, lambda, mu, r, s };
inline constexpr std::size_t kSymCount = 10;
inline constexpr std::array<std::string_view, kSymCount> kSymNames = {
    "t", "w", "b", "c", "v", "k", "lambda", "mu", "r", "s"};

MPoly sym(Sym x);
MPoly num(const Rational& c);
PolyFraction frac(const MPoly& p);

/// Raised when an identity cannot be cleared to a polynomial.
class SpecificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ParamKind { GeneralSRG, TypeI, Raw };
std::string_view to_string(ParamKind kind);

/// Rational parameterization of the variety cut out by the SRG relations.
///
/// GeneralSRG keeps (r, s, mu) free and sets lambda = mu + r + s,
/// k = mu - rs and v = (mu(k+1) + k(k-lambda-1)) / mu. TypeI writes
/// everything in terms of w = sqrt(v). Raw substitutes nothing. The extra
/// symbols t, b, c are free in every parameterization.
class Parameterization {
 public:
  static Parameterization general_srg();
  static Parameterization type_one();
  static Parameterization raw();

  ParamKind kind() const { return kind_; }
  bool is_free(Sym x) const;
  /// Image of one symbol; throws DomainError when the symbol is not allowed.
  const PolyFraction& image(Sym x) const;

 private:
  explicit Parameterization(ParamKind kind);

  ParamKind kind_;
  std::array<std::optional<PolyFraction>, kSymCount> images_;
};

/// Substitutes into a polynomial in the parameter symbols. The result must be a
/// polynomial in the free variables, otherwise SpecificationError.
MPoly substitute(const MPoly& p, const Parameterization& param);
PolyFraction substitute(const PolyFraction& p, const Parameterization& param);

/// Values for all ten symbols at one point.
using SymPoint = std::array<Rational, kSymCount>;

struct IdentityCase {
  std::string id;
  std::string description;
  ParamKind param = ParamKind::Raw;
  PolyFraction lhs{MPoly(kSymCount)};
  MPoly rhs{kSymCount};
  /// Monomial the difference is multiplied by before the zero test.
  Exponents clearing = Exponents(kSymCount, 0);
  /// Direct rational evaluation, independent of the polynomial machinery.
  std::function<Rational(const SymPoint&)> lhs_value;
  std::function<Rational(const SymPoint&)> rhs_value;
};

struct VerifyResult {
  bool zero = false;
  /// max total degree of the cleared sides before they are subtracted.
  int degree = 0;
  MPoly residual{kSymCount};
};

VerifyResult verify_identity_detailed(const IdentityCase& c);
bool verify_identity(const IdentityCase& c);

/// A point satisfying the case's relations, with poles s = 0, mu = 0 avoided.
SymPoint random_point(ParamKind kind, std::uint64_t seed);
/// Evaluates both sides at `trials` random rational points and compares them
/// exactly. Also checks the stored polynomials agree with the direct formulas.
bool random_point_crosscheck(const IdentityCase& c, int trials, std::uint64_t seed = 1);

/// The eight CAP identities behind the bounds.
std::vector<IdentityCase> shipped_identities();

/// Same case with the sign of the `term`-th rhs coefficient flipped.
IdentityCase mutate_rhs_sign(const IdentityCase& c, std::size_t term);

/// C(x, y) built symbolically from the parameter symbols v, k, lambda.
PolyFraction cap_symbolic(const PolyFraction& x, const PolyFraction& y);

}  // namespace srgb
