#include "folia/lp.hpp"

#include <algorithm>

#include "folia/errors.hpp"

namespace folia::lp {

namespace {

// Standardized problem: min c.x s.t. Ax = b, x >= 0, b >= 0, with columns
// [original | slack | artificial] and one artificial per row.
struct Tableau {
  int rows = 0;
  int cols = 0;          // without the rhs column
  int num_original = 0;  // original variable count
  int art_begin = 0;     // first artificial column
  std::vector<std::vector<Rational>> a;  // rows x (cols + 1); last entry = rhs
  std::vector<int> basis;                // basic column per row

  Rational& rhs(int r) { return a[r][cols]; }

  void pivot(int r, int c) {
    const Rational p = a[r][c];
    for (int j = 0; j <= cols; ++j) a[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (int j = 0; j <= cols; ++j) a[i][j] -= factor * a[r][j];
    }
    basis[r] = c;
  }
};

// Reduced costs for the given column costs; r_j = c_j - y.A_j with
// y = c_B B^{-1} read off implicitly through the current tableau.
std::vector<Rational> reduced_costs(const Tableau& t, const std::vector<Rational>& cost) {
  std::vector<Rational> r = cost;
  for (int i = 0; i < t.rows; ++i) {
    const Rational cb = cost[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j < t.cols; ++j) {
      if (t.a[i][j] != 0) r[j] -= cb * t.a[i][j];
    }
  }
  return r;
}

// Bland: entering = lowest eligible column index, leaving = lowest basic
// index among the minimum ratios.  Returns false at optimality, throws
// Unbounded via out-param.
struct StepResult {
  bool moved = false;
  bool unbounded = false;
  int entering = -1;
};

StepResult simplex_step(Tableau& t, const std::vector<Rational>& cost, bool allow_artificial) {
  const std::vector<Rational> red = reduced_costs(t, cost);
  int entering = -1;
  for (int j = 0; j < t.cols; ++j) {
    if (!allow_artificial && j >= t.art_begin) break;
    if (red[j] < 0) {
      entering = j;
      break;
    }
  }
  if (entering < 0) return {};

  int leave_row = -1;
  Rational best_ratio;
  for (int i = 0; i < t.rows; ++i) {
    if (t.a[i][entering] <= 0) continue;
    Rational ratio = t.a[i][t.cols] / t.a[i][entering];
    if (leave_row < 0 || ratio < best_ratio ||
        (ratio == best_ratio && t.basis[i] < t.basis[leave_row])) {
      leave_row = i;
      best_ratio = ratio;
    }
  }
  if (leave_row < 0) return {.moved = false, .unbounded = true, .entering = entering};
  t.pivot(leave_row, entering);
  return {.moved = true, .unbounded = false, .entering = entering};
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

bool Solution::verify(const Problem& p) const {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  // objective sense: verify against the minimization form and flip for max
  std::vector<Rational> c = p.objective;
  if (p.maximize)
    for (auto& v : c) v = -v;
  const Rational min_value = p.maximize ? Rational(-objective) : objective;

  auto primal_feasible = [&](const std::vector<Rational>& pt) {
    if (static_cast<int>(pt.size()) != n) return false;
    for (const auto& v : pt)
      if (v < 0) return false;
    for (const auto& row : p.rows) {
      const Rational lhs = dot(row.coeffs, pt);
      if (row.rel == Rel::Le && lhs > row.rhs) return false;
      if (row.rel == Rel::Ge && lhs < row.rhs) return false;
      if (row.rel == Rel::Eq && lhs != row.rhs) return false;
    }
    return true;
  };

  switch (status) {
    case Status::Optimal: {
      if (!primal_feasible(x)) return false;
      if (dot(c, x) != min_value) return false;
      if (static_cast<int>(dual.size()) != m) return false;
      Rational yb(0);
      for (int i = 0; i < m; ++i) {
        if (p.rows[i].rel == Rel::Le && dual[i] > 0) return false;
        if (p.rows[i].rel == Rel::Ge && dual[i] < 0) return false;
        yb += dual[i] * p.rows[i].rhs;
      }
      for (int j = 0; j < n; ++j) {
        Rational ya(0);
        for (int i = 0; i < m; ++i) ya += dual[i] * p.rows[i].coeffs[j];
        if (ya > c[j]) return false;  // dual feasibility
      }
      return yb == min_value;  // strong duality
    }
    case Status::Infeasible: {
      if (static_cast<int>(farkas.size()) != m) return false;
      Rational yb(0);
      for (int i = 0; i < m; ++i) {
        if (p.rows[i].rel == Rel::Le && farkas[i] > 0) return false;
        if (p.rows[i].rel == Rel::Ge && farkas[i] < 0) return false;
        yb += farkas[i] * p.rows[i].rhs;
      }
      if (yb <= 0) return false;
      for (int j = 0; j < n; ++j) {
        Rational ya(0);
        for (int i = 0; i < m; ++i) ya += farkas[i] * p.rows[i].coeffs[j];
        if (ya > 0) return false;
      }
      return true;
    }
    case Status::Unbounded: {
      if (!primal_feasible(x)) return false;
      if (static_cast<int>(ray.size()) != n) return false;
      for (const auto& v : ray)
        if (v < 0) return false;
      for (const auto& row : p.rows) {
        const Rational ad = dot(row.coeffs, ray);
        if (row.rel == Rel::Le && ad > 0) return false;
        if (row.rel == Rel::Ge && ad < 0) return false;
        if (row.rel == Rel::Eq && ad != 0) return false;
      }
      return dot(c, ray) < 0;
    }
  }
  return false;
}

Solution solve(const Problem& p) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  for (const auto& row : p.rows) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      throw DomainError("constraint length does not match the variable count");
    }
  }
  if (static_cast<int>(p.objective.size()) != n) {
    throw DomainError("objective length does not match the variable count");
  }

  std::vector<Rational> c = p.objective;
  if (p.maximize)
    for (auto& v : c) v = -v;

  // Standardize: slack per inequality, flip rows to b >= 0, artificial per row.
  int num_slack = 0;
  for (const auto& row : p.rows)
    if (row.rel != Rel::Eq) ++num_slack;

  Tableau t;
  t.rows = m;
  t.num_original = n;
  t.art_begin = n + num_slack;
  t.cols = n + num_slack + m;
  t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.resize(m);

  std::vector<int> row_flip(m, 1);
  {
    int slack = 0;
    for (int i = 0; i < m; ++i) {
      const auto& row = p.rows[i];
      for (int j = 0; j < n; ++j) t.a[i][j] = row.coeffs[j];
      if (row.rel != Rel::Eq) {
        t.a[i][n + slack] = row.rel == Rel::Le ? 1 : -1;
        ++slack;
      }
      t.a[i][t.cols] = row.rhs;
      if (t.a[i][t.cols] < 0) {
        row_flip[i] = -1;
        for (int j = 0; j <= t.cols; ++j) t.a[i][j] = -t.a[i][j];
      }
      t.a[i][t.art_begin + i] = 1;
      t.basis[i] = t.art_begin + i;
    }
  }

  // Phase 1: minimize the artificial sum.
  std::vector<Rational> phase1_cost(t.cols, Rational(0));
  for (int j = t.art_begin; j < t.cols; ++j) phase1_cost[j] = 1;
  while (true) {
    const StepResult step = simplex_step(t, phase1_cost, /*allow_artificial=*/true);
    if (step.unbounded) throw InternalError("phase-1 objective cannot be unbounded");
    if (!step.moved) break;
  }

  Rational phase1_value(0);
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= t.art_begin) phase1_value += t.a[i][t.cols];
  }

  Solution sol;
  if (phase1_value > 0) {
    // Farkas certificate from the phase-1 duals: y = c_B B^{-1}, readable
    // under the artificial columns, un-flipped per row.
    sol.status = Status::Infeasible;
    sol.farkas.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational y(0);
      for (int r = 0; r < m; ++r) {
        if (phase1_cost[t.basis[r]] != 0) y += t.a[r][t.art_begin + i];
      }
      sol.farkas[i] = row_flip[i] == 1 ? y : -y;
    }
    if (!sol.verify(p)) throw InternalError("infeasibility certificate failed its re-check");
    return sol;
  }

  // Drive leftover artificials out of the basis where possible; rows that
  // cannot pivot are redundant and stay inert at zero.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < t.art_begin) continue;
    for (int j = 0; j < t.art_begin; ++j) {
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 on the real costs; artificial columns stay only as a B^{-1} view.
  std::vector<Rational> phase2_cost(t.cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2_cost[j] = c[j];
  bool unbounded = false;
  int unbounded_col = -1;
  while (true) {
    const StepResult step = simplex_step(t, phase2_cost, /*allow_artificial=*/false);
    if (step.unbounded) {
      unbounded = true;
      unbounded_col = step.entering;
      break;
    }
    if (!step.moved) break;
  }

  std::vector<Rational> point(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) point[t.basis[i]] = t.a[i][t.cols];
  }

  if (unbounded) {
    sol.status = Status::Unbounded;
    sol.x = point;
    sol.ray.assign(n, Rational(0));
    if (unbounded_col < n) sol.ray[unbounded_col] = 1;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < n) sol.ray[t.basis[i]] = -t.a[i][unbounded_col];
    }
    if (!sol.verify(p)) throw InternalError("unboundedness certificate failed its re-check");
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x = point;
  Rational value(0);
  for (int j = 0; j < n; ++j) value += c[j] * point[j];
  sol.objective = p.maximize ? Rational(-value) : value;
  sol.dual.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational y(0);
    for (int r = 0; r < m; ++r) {
      if (phase2_cost[t.basis[r]] != 0) y += phase2_cost[t.basis[r]] * t.a[r][t.art_begin + i];
    }
    sol.dual[i] = row_flip[i] == 1 ? y : -y;
  }
  if (!sol.verify(p)) throw InternalError("optimality certificate failed its re-check");
  return sol;
}

}  // namespace folia::lp
