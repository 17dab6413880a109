#include <doctest.h>

#include "srgb/catalog.hpp"
#include "srgb/srg_params.hpp"

using namespace srgb;
using Q = Rational;

TEST_CASE("spectrum of an integral-eigenvalue tuple") {
  Spectrum sp = spectrum({144, 39, 6, 12});
  CHECK(sp.r == QuadExt(3));
  CHECK(sp.s == QuadExt(-9));
  REQUIRE(sp.f);
  REQUIRE(sp.g);
  CHECK(*sp.f + *sp.g == 143);
  CHECK(sp.type == SrgType::TypeIIOnly);
}

TEST_CASE("spectrum of conference tuples") {
  QuadExt r17 = QuadExt::sqrt(17);
  Spectrum sp = spectrum({17, 8, 3, 4});
  CHECK(sp.r == (r17 - QuadExt(1)) / QuadExt(2));
  CHECK(sp.s == -(r17 + QuadExt(1)) / QuadExt(2));
  CHECK(sp.type == SrgType::TypeIOnly);

  Spectrum pent = spectrum({5, 2, 0, 1});
  CHECK(pent.r == (QuadExt::sqrt(5) - QuadExt(1)) / QuadExt(2));
  REQUIRE(pent.f);
  CHECK(*pent.f == 2);
  CHECK(*pent.g == 2);

  Spectrum petersen = spectrum({10, 3, 0, 1});
  CHECK(petersen.r == QuadExt(1));
  CHECK(petersen.s == QuadExt(-2));
  CHECK(*petersen.f == 5);
  CHECK(*petersen.g == 4);
}

TEST_CASE("spectrum rejects a negative discriminant") {
  // Not a valid tuple: (lambda-mu)^2 + 4(k-mu) = 4 - 8.
  CHECK_THROWS_AS(spectrum({10, 1, 1, 3}), DomainError);
}

TEST_CASE("classify") {
  CHECK(classify({17, 8, 3, 4}) == SrgType::TypeIOnly);
  CHECK(classify({9, 4, 1, 2}) == SrgType::Both);
  CHECK(classify({50, 7, 0, 1}) == SrgType::TypeIIOnly);
  CHECK(to_string(SrgType::Both) == "I+II");
}

TEST_CASE("complement") {
  CHECK(complement({17, 8, 3, 4}) == SrgParams{17, 8, 3, 4});
  CHECK(complement({144, 39, 6, 12}) == SrgParams{144, 104, 76, 72});
  CHECK(complement(complement({99, 14, 1, 2})) == SrgParams{99, 14, 1, 2});
  CHECK_THROWS_AS(complement({9, 2, 1, 0}), DomainError);
  CHECK_THROWS_AS(complement({9, 6, 3, 6}), DomainError);
}

TEST_CASE("feasibility levels") {
  CHECK(is_feasible({88, 27, 6, 9}, FeasibilityLevel::Integrality));
  CHECK(is_feasible({88, 27, 6, 9}, FeasibilityLevel::AbsoluteBound));
  CHECK_FALSE(is_feasible({10, 3, 1, 1}, FeasibilityLevel::Counting));
  CHECK_FALSE(is_feasible({16, 6, 3, 2}, FeasibilityLevel::Counting));
  // (28,9,0,4): eigenvalues 1 and -5, multiplicities 21 and 6. Integral, but Krein fails.
  FeasibilityResult krein = is_feasible({28, 9, 0, 4}, FeasibilityLevel::Krein);
  CHECK(is_feasible({28, 9, 0, 4}, FeasibilityLevel::Integrality));
  CHECK_FALSE(krein);
  CHECK(krein.failed.find("Krein") != std::string::npos);
  // Conference tuple whose v is not a sum of two squares.
  CHECK_FALSE(is_feasible({21, 10, 4, 5}, FeasibilityLevel::Integrality));
}

TEST_CASE("feasibility level parsing") {
  CHECK(parse_feasibility_level("krein") == FeasibilityLevel::Krein);
  CHECK(parse_feasibility_level("absolute-bound") == FeasibilityLevel::AbsoluteBound);
  CHECK_THROWS_AS(parse_feasibility_level("brouwer"), DomainError);
}

TEST_CASE("parameter slack") {
  ParamSlack a = params_bounds_check({144, 39, 6, 12});
  CHECK(a.v2k_lambda == 72);
  CHECK(a.k_lambda_1 == 32);
  ParamSlack b = params_bounds_check({9, 6, 3, 6});
  CHECK(b.v2k_lambda == 0);
  CHECK(b.k_lambda_1 == 2);
  ParamSlack c = params_bounds_check({9, 2, 1, 0});
  CHECK(c.v2k_lambda == 6);
  CHECK(c.k_lambda_1 == 0);
}

TEST_CASE("sum of two squares") {
  CHECK(is_sum_of_two_squares(17));
  CHECK(is_sum_of_two_squares(9));
  CHECK_FALSE(is_sum_of_two_squares(21));
  CHECK_FALSE(is_sum_of_two_squares(69));
  CHECK(is_sum_of_two_squares(45));
}

TEST_CASE("tuple parsing") {
  ParsedTuple a = parse_tuple("378,52,1,8");
  CHECK(a.edge == EdgeRegularParams{378, 52, 1});
  CHECK(a.mu == 8);
  ParsedTuple b = parse_tuple("21 8 3");
  CHECK(b.edge == EdgeRegularParams{21, 8, 3});
  CHECK_FALSE(b.mu);
  CHECK_THROWS_AS(parse_tuple("1,2"), DomainError);
  CHECK_THROWS_AS(parse_tuple("a,b,c"), DomainError);
}

TEST_CASE("json") {
  nlohmann::json j = SrgParams{17, 8, 3, 4};
  CHECK(j["lambda"] == 3);
  CHECK(j.get<SrgParams>() == SrgParams{17, 8, 3, 4});
}

TEST_CASE("spectral identities over the feasible range") {
  ScanConfig cfg;
  cfg.v_max = 300;
  cfg.level = FeasibilityLevel::Integrality;
  int checked = 0;
  for (const SrgParams& p : enumerate_feasible(cfg)) {
    Spectrum sp = spectrum(p);
    CHECK(sp.r + sp.s == QuadExt(p.lambda - p.mu));
    CHECK(sp.r * sp.s == QuadExt(p.mu - p.k));
    CHECK(sp.r >= QuadExt(0));
    CHECK(sp.s < QuadExt(0));
    if (p.mu == 0) continue;
    QuadExt ks = QuadExt(p.k) / sp.s;
    QuadExt ms = QuadExt(p.mu) / sp.s;
    if (is_type_one(sp.type) && !is_type_two(sp.type)) {
      CHECK((ks - QuadExt(2) * frac_of(ms)).is_rational());
      CHECK(frac_of(ks - QuadExt(2) * frac_of(ms)).is_zero());
      QuadExt rv = QuadExt::sqrt(static_cast<std::uint64_t>(p.v));
      CHECK(sp.s == -(rv + QuadExt(1)) / QuadExt(2));
    }
    if (is_type_two(sp.type)) CHECK(frac_of(ks - frac_of(ms)).is_zero());
    if (p.primitive()) {
      Spectrum cs = spectrum(complement(p));
      CHECK(cs.r == -sp.s - QuadExt(1));
      CHECK(cs.s == -sp.r - QuadExt(1));
    }
    ++checked;
  }
  CHECK(checked > 500);
}
