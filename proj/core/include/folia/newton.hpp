#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/polynomial.hpp"
#include "folia/rational.hpp"

namespace folia {

// Monomial ideal given by generator exponent vectors.  Redundant generators
// are allowed; results do not change.
struct MonomialIdeal {
  int dimension = 0;
  std::vector<MultiIndex> generators;

  MonomialIdeal(int dimension, std::vector<MultiIndex> generators);

  // A generator with all exponents zero makes the ideal the unit ideal.
  bool has_unit_generator() const;
};

// Witness for a Newton-polyhedron membership query.  On membership, q
// decomposes as sum mu_i v_i + s with mu a convex combination and s >= 0.
// On non-membership, `separating_weight` is an integer vector w >= 0 with
// <w, q> strictly below min_i <w, v_i>.
struct MembershipResult {
  bool member = false;
  std::vector<Rational> mu;
  std::vector<Rational> slack;
  std::vector<Integer> separating_weight;

  // Exact re-check by direct arithmetic, independent of the LP solver.
  bool verify(const std::vector<Rational>& q, const MonomialIdeal& ideal) const;
};

MembershipResult newton_membership(const std::vector<Rational>& q, const MonomialIdeal& ideal);

// lct with both certificates: the membership witness shows
// (1/value)*(1,..,1) lies on the Newton polyhedron (value is attained), and
// the integer weight vector shows value = (sum w_i) / min_i <w, v_i> is also
// an upper bound over every weight vector (value is maximal).
struct LctResult {
  Rational value;
  std::vector<Rational> mu;
  std::vector<Rational> slack;
  std::vector<Integer> weight;

  bool verify(const MonomialIdeal& ideal) const;
};

// The unit ideal has lct +infinity; that verdict is distinguished rather
// than encoded as a number.
struct LctOutcome {
  bool infinite = false;
  std::optional<LctResult> result;
};

LctOutcome lct_monomial(const MonomialIdeal& ideal);

// Same value, recorded as applying to a general linear combination of the
// given monomials; the genericity hypothesis is logged, not proven.
struct GenericLct {
  LctOutcome outcome;
  bool generic_assumption = true;
};

GenericLct lct_generic_combination(int dimension, const std::vector<MultiIndex>& monomials);

// lct of the ideal generated by supp(f): an upper bound for the log
// canonical threshold of {f = 0} at the origin.  A result < 1 refutes log
// canonicity.  Requires f != 0 and f(0) = 0.
Rational lct_upper_bound_from_support(const Polynomial& f);

// Text format: comma-separated monomials in the polynomial grammar,
// e.g. "x2^2*x3, x1*x3^2, x1^2*x2".
MonomialIdeal parse_monomial_ideal(std::string_view text, int dimension);
std::string to_string(const MonomialIdeal& ideal);

}  // namespace folia
