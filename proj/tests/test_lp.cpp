#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/lp.hpp"
#include "folia/rng.hpp"

using namespace folia;
using namespace folia::lp;

namespace {

Problem make(int vars, bool maximize, std::vector<Rational> objective,
             std::vector<Constraint> rows) {
  Problem p;
  p.num_vars = vars;
  p.maximize = maximize;
  p.objective = std::move(objective);
  p.rows = std::move(rows);
  return p;
}

}  // namespace

TEST_CASE("maximize under a single bound") {
  const Problem p = make(1, true, {Rational(1)}, {{{Rational(1)}, Rel::Le, Rational(1)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 1);
  CHECK(s.x[0] == 1);
  CHECK(s.verify(p));
}

TEST_CASE("infeasible system has a checked certificate") {
  const Problem p = make(1, false, {Rational(0)},
                         {{{Rational(1)}, Rel::Ge, Rational(1)},
                          {{Rational(1)}, Rel::Le, Rational(0)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Infeasible);
  CHECK(s.verify(p));
}

TEST_CASE("unbounded direction comes with a ray") {
  const Problem p = make(2, false, {Rational(-1), Rational(0)},
                         {{{Rational(0), Rational(1)}, Rel::Le, Rational(3)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Unbounded);
  CHECK(s.verify(p));
}

TEST_CASE("equality systems and degenerate pivots") {
  // x + y = 2, x - y = 0, minimize x: unique point (1,1)
  const Problem p = make(2, false, {Rational(1), Rational(0)},
                         {{{Rational(1), Rational(1)}, Rel::Eq, Rational(2)},
                          {{Rational(1), Rational(-1)}, Rel::Eq, Rational(0)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x == std::vector<Rational>{1, 1});
  CHECK(s.verify(p));
}

TEST_CASE("redundant rows are tolerated") {
  const Problem p = make(1, false, {Rational(1)},
                         {{{Rational(1)}, Rel::Eq, Rational(2)},
                          {{Rational(2)}, Rel::Eq, Rational(4)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 2);
}

TEST_CASE("negative right-hand sides are normalized") {
  // -x <= -3  i.e. x >= 3
  const Problem p = make(1, false, {Rational(1)}, {{{Rational(-1)}, Rel::Le, Rational(-3)}});
  const Solution s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 3);
  CHECK(s.verify(p));
}

TEST_CASE("deterministic under repeated solves") {
  const Problem p = make(3, false, {Rational(2), Rational(3), Rational(1)},
                         {{{Rational(1), Rational(1), Rational(1)}, Rel::Ge, Rational(4)},
                          {{Rational(1), Rational(0), Rational(2)}, Rel::Ge, Rational(3)}});
  const Solution a = solve(p);
  const Solution b = solve(p);
  REQUIRE(a.status == Status::Optimal);
  CHECK(a.x == b.x);
  CHECK(a.dual == b.dual);
  CHECK(a.objective == b.objective);
}

TEST_CASE("random problems always return verified witnesses") {
  Rng rng(123);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int i = 0; i < 120; ++i) {
    const int vars = 1 + static_cast<int>(rng.uniform(0, 3));
    const int rows = static_cast<int>(rng.uniform(0, 4));
    Problem p;
    p.num_vars = vars;
    p.maximize = rng.uniform(0, 1) == 1;
    for (int j = 0; j < vars; ++j) p.objective.push_back(rng.uniform(-4, 4));
    for (int r = 0; r < rows; ++r) {
      Constraint row;
      for (int j = 0; j < vars; ++j) row.coeffs.push_back(rng.uniform(-3, 3));
      row.rel = rng.uniform(0, 2) == 0 ? Rel::Le : (rng.uniform(0, 1) == 0 ? Rel::Ge : Rel::Eq);
      row.rhs = rng.uniform(-5, 5);
      p.rows.push_back(std::move(row));
    }
    const Solution s = solve(p);  // solve() re-checks internally and throws on failure
    CHECK(s.verify(p));
    if (s.status == Status::Optimal) ++optimal;
    if (s.status == Status::Infeasible) ++infeasible;
    if (s.status == Status::Unbounded) ++unbounded;
  }
  // the sample must exercise all three verdicts
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}
