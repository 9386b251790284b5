#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "folia/errors.hpp"
#include "folia/newton.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

std::vector<Rational> point(std::initializer_list<Rational> values) { return values; }

MonomialIdeal random_ideal(Rng& rng, int n) {
  std::vector<MultiIndex> gens;
  const int count = static_cast<int>(rng.uniform(1, 4));
  for (int g = 0; g < count; ++g) {
    while (true) {
      MultiIndex e(n);
      bool nonzero = false;
      for (int j = 0; j < n; ++j) {
        e[j] = static_cast<int>(rng.uniform(0, 4));
        nonzero = nonzero || e[j] > 0;
      }
      if (nonzero) {
        gens.push_back(std::move(e));
        break;
      }
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

TEST_CASE("membership with the three-cycle ideal") {
  const MonomialIdeal ideal = parse_monomial_ideal("x2^2*x3, x1*x3^2, x1^2*x2", 3);
  const MembershipResult r =
      newton_membership(point({Rational(1), Rational(1), Rational(1)}), ideal);
  REQUIRE(r.member);
  CHECK(r.mu == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(std::all_of(r.slack.begin(), r.slack.end(), [](const Rational& s) { return s == 0; }));
  CHECK(r.verify(point({Rational(1), Rational(1), Rational(1)}), ideal));
}

TEST_CASE("the origin is never on a nonzero polyhedron") {
  const MonomialIdeal ideal = parse_monomial_ideal("x^2, y", 2);
  const MembershipResult r = newton_membership(point({Rational(0), Rational(0)}), ideal);
  REQUIRE_FALSE(r.member);
  CHECK(r.verify(point({Rational(0), Rational(0)}), ideal));
}

TEST_CASE("single-generator membership") {
  const MonomialIdeal ideal = parse_monomial_ideal("x^2", 2);
  const MembershipResult r = newton_membership(point({Rational(2), Rational(0)}), ideal);
  REQUIRE(r.member);
  CHECK(r.mu == std::vector<Rational>{1});
  CHECK(r.slack == std::vector<Rational>{0, 0});

  const MembershipResult miss = newton_membership(point({Rational(1), Rational(0)}), ideal);
  REQUIRE_FALSE(miss.member);
  CHECK(miss.verify(point({Rational(1), Rational(0)}), ideal));
}

TEST_CASE("threshold examples") {
  CHECK(lct_monomial(parse_monomial_ideal("x2^2*x3, x1*x3^2, x1^2*x2", 3)).result->value == 1);
  CHECK(lct_monomial(parse_monomial_ideal("x^2", 1)).result->value == Rational(1, 2));
  CHECK(lct_monomial(parse_monomial_ideal("x, y", 2)).result->value == 2);

  const LctOutcome unit = lct_monomial(MonomialIdeal(2, {{0, 0}, {1, 0}}));
  CHECK(unit.infinite);
  CHECK(!unit.result.has_value());
}

TEST_CASE("witnesses survive tampering checks") {
  const MonomialIdeal ideal = parse_monomial_ideal("x^2, y^3", 2);
  LctResult result = *lct_monomial(ideal).result;
  CHECK(result.verify(ideal));

  LctResult wrong_value = result;
  wrong_value.value += 1;
  CHECK_FALSE(wrong_value.verify(ideal));

  LctResult wrong_mu = result;
  wrong_mu.mu[0] += Rational(1, 7);
  CHECK_FALSE(wrong_mu.verify(ideal));

  LctResult wrong_weight = result;
  wrong_weight.weight[0] += 1;
  CHECK_FALSE(wrong_weight.verify(ideal));
}

TEST_CASE("generic combinations carry the assumption flag") {
  const GenericLct g = lct_generic_combination(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
  CHECK(g.generic_assumption);
  CHECK(g.outcome.result->value == 1);

  const GenericLct squares = lct_generic_combination(2, {{2, 0}, {0, 2}});
  CHECK(squares.outcome.result->value == 1);

  const GenericLct line = lct_generic_combination(1, {{1}});
  CHECK(line.outcome.result->value == 1);
}

TEST_CASE("support upper bounds") {
  CHECK(lct_upper_bound_from_support(parse_polynomial("x^2 + y^3", 2)) == Rational(5, 6));
  CHECK(lct_upper_bound_from_support(parse_polynomial("x*y", 2)) == 1);
  CHECK(lct_upper_bound_from_support(parse_polynomial("x^5", 1)) == Rational(1, 5));
  CHECK_THROWS_AS(lct_upper_bound_from_support(parse_polynomial("x + 1", 1)), DomainError);
  CHECK_THROWS_AS(lct_upper_bound_from_support(Polynomial::zero(2)), DomainError);
}

TEST_CASE("monotonicity and scaling") {
  Rng rng(402);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 2));
    const MonomialIdeal ideal = random_ideal(rng, n);
    const Rational base = lct_monomial(ideal).result->value;

    // adding a generator never decreases the threshold
    std::vector<MultiIndex> more = ideal.generators;
    MultiIndex extra(n, 0);
    extra[static_cast<int>(rng.uniform(0, n - 1))] = static_cast<int>(rng.uniform(1, 4));
    more.push_back(extra);
    CHECK(lct_monomial(MonomialIdeal(n, more)).result->value >= base);

    // scaling every generator by k divides the threshold by k
    const int k = static_cast<int>(rng.uniform(2, 4));
    std::vector<MultiIndex> scaled = ideal.generators;
    for (auto& g : scaled)
      for (auto& e : g) e *= k;
    CHECK(lct_monomial(MonomialIdeal(n, scaled)).result->value == base / k);

    // permuting coordinates leaves the threshold unchanged
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    for (int j = n - 1; j > 0; --j) std::swap(perm[j], perm[rng.uniform(0, j)]);
    std::vector<MultiIndex> permuted = ideal.generators;
    for (auto& g : permuted) {
      MultiIndex h(n);
      for (int j = 0; j < n; ++j) h[perm[j]] = g[j];
      g = h;
    }
    CHECK(lct_monomial(MonomialIdeal(n, permuted)).result->value == base);
  }
}

TEST_CASE("ideal validation") {
  CHECK_THROWS_AS(MonomialIdeal(2, {}), DomainError);
  CHECK_THROWS_AS(MonomialIdeal(2, {{1}}), DomainError);
  CHECK_THROWS_AS(parse_monomial_ideal("x + y", 2), ParseError);
  CHECK(parse_monomial_ideal("x, x", 2).generators.size() == 2);  // redundancy allowed
  CHECK(to_string(parse_monomial_ideal("x2^2*x3, x1*x3^2", 3)) == "y^2*z, x*z^2");
}
