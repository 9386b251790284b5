#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/rational.hpp"

namespace folia {

// Exponent vector; its length is the ambient dimension, entries are >= 0.
using MultiIndex = std::vector<int>;

// Positive integer weights, one per variable.
using WeightVector = std::vector<int>;

// Strictly increasing set of 0-based variable / matrix indices.
using IndexSet = std::vector<int>;

// Graded lexicographic order: compare total degree first, ties broken
// lexicographically.  Keeps term maps in a canonical order so printing is
// deterministic.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Sparse multivariate polynomial over the rationals.  Invariants: no stored
// zero coefficient, every key has length dimension(), the zero polynomial
// has an empty term map.  Values are immutable after construction apart from
// add_term() used while building; every operation returns a fresh value.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

  explicit Polynomial(int dimension);

  static Polynomial zero(int dimension) { return Polynomial(dimension); }
  static Polynomial constant(int dimension, const Rational& c);
  // 0-based variable index.
  static Polynomial variable(int dimension, int index);
  static Polynomial monomial(int dimension, MultiIndex exponents, const Rational& c);

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant() const;

  Rational coefficient(const MultiIndex& exponents) const;
  Rational constant_term() const;
  std::vector<MultiIndex> support() const;
  // Max total degree over the support; -1 for the zero polynomial.
  long total_degree() const;

  // Accumulates c * x^exponents, erasing the term if it cancels to zero.
  void add_term(const MultiIndex& exponents, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // d/dx_index, 0-based.
  Polynomial derivative(int index) const;

  // min over the support of <w, alpha>; nullopt encodes +infinity (the zero
  // polynomial), never a sentinel number.
  std::optional<long long> weighted_order(const WeightVector& w) const;

  // Sum of the terms realizing weighted_order; rejects the zero polynomial.
  Polynomial weighted_lowest_part(const WeightVector& w) const;

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  int dimension_;
  TermMap terms_;
};

// Text grammar (whitespace insignificant):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := atom ('*' atom)*
//   atom   := var ('^' posint)? | '(' expr ')' | int ('/' posint)?
//   var    := 'x' posint | 'x' | 'y' | 'z'
// 'x', 'y', 'z' alias x1, x2, x3 and are only legal when dimension <= 3.
Polynomial parse_polynomial(std::string_view text, int dimension);

// Canonical form: terms in descending graded-lex order, explicit '*',
// aliases x, y, z used when dimension <= 3.  parse(to_string(p)) == p.
std::string to_string(const Polynomial& p);

// "x"/"y"/"z" for dimension <= 3, otherwise "x1".."xn"; 0-based index.
std::string variable_name(int dimension, int index);

// Sets x_j = 0 for every j outside `keep` and renumbers the surviving
// variables to 0..|keep|-1 in increasing order of `keep`.
Polynomial restrict_to_subspace(const Polynomial& p, const IndexSet& keep);

// prod_{j in vars} x_j as a polynomial of the given dimension.
Polynomial coordinate_product(int dimension, const IndexSet& vars);

void validate_weights(const WeightVector& w, int dimension);
void validate_index_set(const IndexSet& s, int dimension);

}  // namespace folia
