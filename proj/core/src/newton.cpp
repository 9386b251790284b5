#include "folia/newton.hpp"

#include <algorithm>
#include <sstream>

#include "folia/errors.hpp"
#include "folia/lp.hpp"

namespace folia {

namespace {

// Least common multiple of the denominators, for scaling dual vectors to
// integer weight witnesses.
Integer denominator_lcm(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& r : v) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    l = g;
  }
  return l;
}

std::vector<Integer> scale_to_integers(const std::vector<Rational>& v) {
  const Integer l = denominator_lcm(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& r : v) {
    Rational scaled = r * Rational(l);
    out.push_back(Integer(scaled.get_num()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& w : out) w /= g;
  }
  return out;
}

Integer weight_of(const std::vector<Integer>& w, const MultiIndex& v) {
  Integer acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
  return acc;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dimension_, std::vector<MultiIndex> generators_)
    : dimension(dimension_), generators(std::move(generators_)) {
  if (dimension < 1) throw DomainError("ideal dimension must be >= 1");
  if (generators.empty()) throw DomainError("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dimension) {
      throw DomainError("generator length does not match dimension");
    }
    for (int e : g) {
      if (e < 0) throw DomainError("negative exponent in generator");
    }
  }
}

bool MonomialIdeal::has_unit_generator() const {
  return std::any_of(generators.begin(), generators.end(), [](const MultiIndex& g) {
    return std::all_of(g.begin(), g.end(), [](int e) { return e == 0; });
  });
}

bool MembershipResult::verify(const std::vector<Rational>& q, const MonomialIdeal& ideal) const {
  const int n = ideal.dimension;
  const std::size_t m = ideal.generators.size();
  if (member) {
    if (mu.size() != m || static_cast<int>(slack.size()) != n) return false;
    Rational total(0);
    for (const auto& v : mu) {
      if (v < 0) return false;
      total += v;
    }
    if (total != 1) return false;
    for (const auto& s : slack) {
      if (s < 0) return false;
    }
    for (int j = 0; j < n; ++j) {
      Rational coord(0);
      for (std::size_t i = 0; i < m; ++i) coord += mu[i] * ideal.generators[i][j];
      coord += slack[j];
      if (coord != q[j]) return false;
    }
    return true;
  }
  if (static_cast<int>(separating_weight.size()) != n) return false;
  bool nonzero = false;
  for (const auto& w : separating_weight) {
    if (w < 0) return false;
    if (w > 0) nonzero = true;
  }
  if (!nonzero) return false;
  Rational wq(0);
  for (int j = 0; j < n; ++j) wq += Rational(separating_weight[j]) * q[j];
  for (const auto& g : ideal.generators) {
    if (wq >= Rational(weight_of(separating_weight, g))) return false;
  }
  return true;
}

MembershipResult newton_membership(const std::vector<Rational>& q, const MonomialIdeal& ideal) {
  const int n = ideal.dimension;
  const int m = static_cast<int>(ideal.generators.size());
  if (static_cast<int>(q.size()) != n) throw DomainError("query length does not match dimension");
  for (const auto& c : q) {
    if (c < 0) throw DomainError("query point must be componentwise nonnegative");
  }

  // Variables: mu_1..mu_m, s_1..s_n.  Rows: sum mu_i v_i + s = q and
  // sum mu_i = 1.
  lp::Problem prob;
  prob.num_vars = m + n;
  prob.objective.assign(prob.num_vars, Rational(0));
  for (int j = 0; j < n; ++j) {
    lp::Constraint row;
    row.coeffs.assign(prob.num_vars, Rational(0));
    for (int i = 0; i < m; ++i) row.coeffs[i] = ideal.generators[i][j];
    row.coeffs[m + j] = 1;
    row.rel = lp::Rel::Eq;
    row.rhs = q[j];
    prob.rows.push_back(std::move(row));
  }
  {
    lp::Constraint convexity;
    convexity.coeffs.assign(prob.num_vars, Rational(0));
    for (int i = 0; i < m; ++i) convexity.coeffs[i] = 1;
    convexity.rel = lp::Rel::Eq;
    convexity.rhs = 1;
    prob.rows.push_back(std::move(convexity));
  }

  const lp::Solution sol = lp::solve(prob);
  MembershipResult out;
  if (sol.status == lp::Status::Optimal) {
    out.member = true;
    out.mu.assign(sol.x.begin(), sol.x.begin() + m);
    out.slack.assign(sol.x.begin() + m, sol.x.end());
  } else if (sol.status == lp::Status::Infeasible) {
    out.member = false;
    std::vector<Rational> w(n);
    for (int j = 0; j < n; ++j) w[j] = -sol.farkas[j];
    out.separating_weight = scale_to_integers(w);
  } else {
    throw InternalError("membership query cannot be unbounded");
  }
  if (!out.verify(q, ideal)) throw InternalError("membership witness failed its re-check");
  return out;
}

bool LctResult::verify(const MonomialIdeal& ideal) const {
  if (value <= 0) return false;
  // Attainability: (1/value)*(1,..,1) = sum mu_i v_i + s.
  MembershipResult membership;
  membership.member = true;
  membership.mu = mu;
  membership.slack = slack;
  const std::vector<Rational> target(ideal.dimension, Rational(1) / value);
  if (!membership.verify(target, ideal)) return false;
  // Maximality: value * min_i <w, v_i> == sum w_i for the supporting weight.
  if (static_cast<int>(weight.size()) != ideal.dimension) return false;
  Integer wsum = 0;
  bool nonzero = false;
  for (const auto& wi : weight) {
    if (wi < 0) return false;
    if (wi > 0) nonzero = true;
    wsum += wi;
  }
  if (!nonzero) return false;
  std::optional<Integer> min_weight;
  for (const auto& g : ideal.generators) {
    const Integer wg = weight_of(weight, g);
    if (!min_weight || wg < *min_weight) min_weight = wg;
  }
  if (*min_weight <= 0) return false;
  return value * Rational(*min_weight) == Rational(wsum);
}

LctOutcome lct_monomial(const MonomialIdeal& ideal) {
  LctOutcome out;
  if (ideal.has_unit_generator()) {
    out.infinite = true;
    return out;
  }
  const int n = ideal.dimension;
  const int m = static_cast<int>(ideal.generators.size());

  // minimize t subject to t*(1,..,1) = sum mu_i v_i + s, sum mu_i = 1;
  // lct = 1/t.  Variables: t, mu_1..mu_m, s_1..s_n.
  lp::Problem prob;
  prob.num_vars = 1 + m + n;
  prob.objective.assign(prob.num_vars, Rational(0));
  prob.objective[0] = 1;
  for (int j = 0; j < n; ++j) {
    lp::Constraint row;
    row.coeffs.assign(prob.num_vars, Rational(0));
    row.coeffs[0] = 1;
    for (int i = 0; i < m; ++i) row.coeffs[1 + i] = -ideal.generators[i][j];
    row.coeffs[1 + m + j] = -1;
    row.rel = lp::Rel::Eq;
    row.rhs = 0;
    prob.rows.push_back(std::move(row));
  }
  {
    lp::Constraint convexity;
    convexity.coeffs.assign(prob.num_vars, Rational(0));
    for (int i = 0; i < m; ++i) convexity.coeffs[1 + i] = 1;
    convexity.rel = lp::Rel::Eq;
    convexity.rhs = 1;
    prob.rows.push_back(std::move(convexity));
  }

  const lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::Optimal) {
    throw InternalError("lct program must have an optimum for a non-unit ideal");
  }
  const Rational t = sol.x[0];
  if (t <= 0) throw InternalError("lct program returned a nonpositive optimum");

  LctResult res;
  res.value = 1 / t;
  res.mu.reserve(m);
  // Scale the decomposition of t*(1,..,1) to one of (1/value)*(1,..,1) = same point.
  for (int i = 0; i < m; ++i) res.mu.push_back(sol.x[1 + i]);
  for (int j = 0; j < n; ++j) res.slack.push_back(sol.x[1 + m + j]);
  std::vector<Rational> y(sol.dual.begin(), sol.dual.begin() + n);
  res.weight = scale_to_integers(y);
  if (!res.verify(ideal)) throw InternalError("lct witnesses failed their re-check");

  out.result = std::move(res);
  return out;
}

GenericLct lct_generic_combination(int dimension, const std::vector<MultiIndex>& monomials) {
  GenericLct out;
  out.outcome = lct_monomial(MonomialIdeal(dimension, monomials));
  out.generic_assumption = true;
  return out;
}

Rational lct_upper_bound_from_support(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("support bound needs a nonzero polynomial");
  if (f.constant_term() != 0) throw DomainError("polynomial is a unit at the origin");
  const LctOutcome out = lct_monomial(MonomialIdeal(f.dimension(), f.support()));
  if (out.infinite) throw InternalError("support of a non-unit cannot generate the unit ideal");
  return out.result->value;
}

MonomialIdeal parse_monomial_ideal(std::string_view text, int dimension) {
  std::vector<MultiIndex> gens;
  std::size_t start = 0;
  std::size_t piece_start = 1;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string_view piece =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    piece_start = start + 1;
    const Polynomial mono = parse_polynomial(piece, dimension);
    if (mono.term_count() != 1) {
      throw ParseError("ideal generators must be single monomials", piece_start);
    }
    gens.push_back(mono.terms().begin()->first);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return MonomialIdeal(dimension, std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i) out << ", ";
    out << to_string(Polynomial::monomial(ideal.dimension, ideal.generators[i], 1));
  }
  return out.str();
}

}  // namespace folia
