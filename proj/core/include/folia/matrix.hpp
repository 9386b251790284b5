#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/errors.hpp"
#include "folia/polynomial.hpp"
#include "folia/rational.hpp"

namespace folia {

// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int order);

  static RationalMatrix zero(int order) { return RationalMatrix(order); }
  static RationalMatrix identity(int order);

  int order() const { return order_; }
  const Rational& at(int i, int j) const { return entries_[i * order_ + j]; }
  Rational& at(int i, int j) { return entries_[i * order_ + j]; }

  bool is_zero() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& c) const;
  RationalMatrix transposed() const;
  bool operator==(const RationalMatrix& rhs) const;
  bool operator!=(const RationalMatrix& rhs) const { return !(*this == rhs); }

  // Row i as the linear form sum_j a_ij x_j in `order` variables.
  Polynomial row_linear_form(int i) const;

 private:
  int order_;
  std::vector<Rational> entries_;
};

// Raised when an operation requires every proper principal submatrix to be
// nilpotent and one is not; carries a witness index set (0-based).
class HypothesisViolated : public DomainError {
 public:
  explicit HypothesisViolated(IndexSet witness);
  const IndexSet& witness() const { return witness_; }

 private:
  IndexSet witness_;
};

// Exactly A^n == 0, decided by repeated squaring.
bool is_nilpotent(const RationalMatrix& a);

// Keeps the rows and columns indexed by the nonempty set I.
RationalMatrix principal_submatrix(const RationalMatrix& a, const IndexSet& I);

// Directed graph on {0..n-1} with an edge i -> j whenever a_ij != 0;
// self-loops included.
struct Digraph {
  int order = 0;
  std::vector<std::vector<int>> successors;

  bool has_edge(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;
};

Digraph adjacency_graph(const RationalMatrix& a);

// Length of the shortest directed cycle (self-loop = 1); nullopt if acyclic.
std::optional<int> shortest_cycle_length(const RationalMatrix& a);

struct CycleClassification {
  enum class Kind { Nilpotent, CycleForm };
  Kind kind = Kind::Nilpotent;
  // CycleForm: vertex order v_0, v_1, ..., v_{n-1} starting at vertex 0 with
  // a[v_k][v_{k+1 mod n}] = entries[k] != 0 and every other entry zero.
  std::vector<int> cycle;
  std::vector<Rational> entries;
};

// Requires every proper principal submatrix nilpotent (throws
// HypothesisViolated with a witness otherwise).  Nilpotent matrices classify
// as Nilpotent; non-nilpotent ones are, after a permutation, a single
// n-cycle with nonzero entries exactly on the cycle.
CycleClassification classify_special(const RationalMatrix& a);

// Reassembles the matrix described by a CycleForm classification.
RationalMatrix matrix_from_cycle_form(int order, const std::vector<int>& cycle,
                                      const std::vector<Rational>& entries);

// det(tI - A) as a univariate polynomial, computed by division-free
// expansion over the polynomial ring.
Polynomial characteristic_polynomial(const RationalMatrix& a);

// Text format: rows separated by ';', entries by ',', e.g. "0,1;1,0".
RationalMatrix parse_rational_matrix(std::string_view text);
std::string to_string(const RationalMatrix& a);

}  // namespace folia
