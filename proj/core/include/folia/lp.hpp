#pragma once

#include <vector>

#include "folia/rational.hpp"

namespace folia::lp {

enum class Rel { Le, Eq, Ge };

struct Constraint {
  std::vector<Rational> coeffs;
  Rel rel = Rel::Eq;
  Rational rhs;
};

// min (or max) c.x subject to the rows, over x >= 0.
struct Problem {
  int num_vars = 0;
  bool maximize = false;
  std::vector<Rational> objective;
  std::vector<Constraint> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

// Every status comes with an exactly re-checkable witness:
//  - Optimal: primal x plus duals y per row.  Relative to the minimization
//    form, y satisfies y.A <= c componentwise, y_i <= 0 on Le rows,
//    y_i >= 0 on Ge rows, and y.b equals the optimum.
//  - Infeasible: Farkas multipliers y with the same row sign conditions,
//    y.A <= 0 and y.b > 0.
//  - Unbounded: a feasible point x and a ray d >= 0 with A.d respecting the
//    row directions and c.d < 0 (minimization) / > 0 (maximization).
// solve() re-validates the witness before returning and throws
// InternalError if the check fails.
struct Solution {
  Status status = Status::Optimal;
  Rational objective;
  std::vector<Rational> x;
  std::vector<Rational> dual;
  std::vector<Rational> farkas;
  std::vector<Rational> ray;

  bool verify(const Problem& p) const;
};

// Two-phase dense simplex over exact rationals, Bland's rule, deterministic.
Solution solve(const Problem& p);

}  // namespace folia::lp
