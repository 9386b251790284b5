#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/errors.hpp"
#include "folia/matrix.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix a(static_cast<int>(rows.size()));
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) a.at(i, j) = rows[i][j];
  return a;
}

RationalMatrix unit_cycle(int n) {
  RationalMatrix a(n);
  for (int i = 0; i < n; ++i) a.at(i, (i + 1) % n) = 1;
  return a;
}

// char(A) evaluated at A via Horner in the matrix ring
RationalMatrix evaluate_at_matrix(const Polynomial& char_poly, const RationalMatrix& a) {
  const long degree = char_poly.total_degree();
  RationalMatrix acc(a.order());
  for (long d = degree; d >= 0; --d) {
    acc = acc * a;
    const Rational c = char_poly.coefficient({static_cast<int>(d)});
    if (c != 0) acc = acc + RationalMatrix::identity(a.order()).scaled(c);
  }
  return acc;
}

}  // namespace

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(from_rows({{0, 1}, {0, 0}})));
  CHECK_FALSE(is_nilpotent(from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_nilpotent(unit_cycle(3)));
  CHECK(is_nilpotent(RationalMatrix::zero(4)));
  // nilpotent despite a dense pattern
  CHECK(is_nilpotent(from_rows({{1, 1}, {-1, -1}})));
}

TEST_CASE("transpose invariance of nilpotency") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 3));
    RationalMatrix a(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a.at(r, c) = rng.uniform(-2, 2);
    CHECK(is_nilpotent(a) == is_nilpotent(a.transposed()));
  }
}

TEST_CASE("principal submatrices") {
  RationalMatrix a(3);
  int v = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = v++;
  const RationalMatrix sub = principal_submatrix(a, {0, 2});
  CHECK(sub.order() == 2);
  CHECK(sub.at(0, 0) == 1);
  CHECK(sub.at(0, 1) == 3);
  CHECK(sub.at(1, 0) == 7);
  CHECK(sub.at(1, 1) == 9);

  CHECK(principal_submatrix(a, {0, 1, 2}) == a);
  CHECK(is_nilpotent(principal_submatrix(unit_cycle(3), {0, 1})));
  CHECK_THROWS_AS(principal_submatrix(a, {}), DomainError);
  CHECK_THROWS_AS(principal_submatrix(a, {0, 3}), DomainError);
}

TEST_CASE("adjacency graph") {
  const Digraph diag = adjacency_graph(from_rows({{1, 0}, {0, 2}}));
  CHECK(diag.edges() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

  const Digraph single = adjacency_graph(from_rows({{0, 1}, {0, 0}}));
  CHECK(single.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  const Digraph cycle = adjacency_graph(unit_cycle(4));
  CHECK(cycle.edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

TEST_CASE("shortest cycle length") {
  CHECK(!shortest_cycle_length(from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}})).has_value());
  CHECK(shortest_cycle_length(from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 1);
  CHECK(shortest_cycle_length(unit_cycle(3)) == 3);
  CHECK(shortest_cycle_length(from_rows({{0, 1}, {1, 0}})) == 2);
}

TEST_CASE("cycle classification") {
  const CycleClassification nil = classify_special(from_rows({{0, 1}, {0, 0}}));
  CHECK(nil.kind == CycleClassification::Kind::Nilpotent);

  const RationalMatrix a = from_rows({{0, 0, 5}, {7, 0, 0}, {0, -2, 0}});
  const CycleClassification cycle = classify_special(a);
  REQUIRE(cycle.kind == CycleClassification::Kind::CycleForm);
  CHECK(cycle.cycle == std::vector<int>{0, 2, 1});
  CHECK(cycle.entries == std::vector<Rational>{5, -2, 7});
  CHECK(matrix_from_cycle_form(3, cycle.cycle, cycle.entries) == a);

  try {
    classify_special(from_rows({{1, 0}, {0, 0}}));
    CHECK(false);
  } catch (const HypothesisViolated& e) {
    CHECK(e.witness() == IndexSet{0});
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(to_string(characteristic_polynomial(RationalMatrix::identity(2))) ==
        "x^2 - 2*x + 1");
  CHECK(to_string(characteristic_polynomial(RationalMatrix::zero(3))) == "x^3");

  RationalMatrix cycle(3);
  cycle.at(0, 1) = 2;
  cycle.at(1, 2) = 3;
  cycle.at(2, 0) = Rational(1, 2);
  CHECK(characteristic_polynomial(cycle) ==
        parse_polynomial("x^3 - 3", 1));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 3));
    RationalMatrix a(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Rational v(rng.uniform(-4, 4), rng.uniform(1, 3));
        v.canonicalize();
        a.at(r, c) = v;
      }
    }
    CHECK(evaluate_at_matrix(characteristic_polynomial(a), a).is_zero());
  }
}

TEST_CASE("matrix text format") {
  const RationalMatrix a = parse_rational_matrix("0,1;1,0");
  CHECK(a.at(0, 1) == 1);
  CHECK(to_string(a) == "0,1;1,0");
  CHECK(parse_rational_matrix("1/2, -3 ; 0, 5").at(0, 0) == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational_matrix("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_rational_matrix("1,x;3,4"), ParseError);
}
