#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/matrix.hpp"
#include "folia/newton.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Polynomial vector field sum_i components[i] * d/dx_i.
struct VectorField {
  int dimension = 0;
  std::vector<Polynomial> components;

  VectorField(int dimension, std::vector<Polynomial> components);

  bool is_zero() const;
  // All components vanish at the origin.
  bool singular_at_origin() const;
  // Derivation applied to a polynomial: sum_i components[i] * df/dx_i.
  Polynomial apply(const Polynomial& f) const;
};

using LambdaVector = std::vector<Rational>;

enum class Verdict { Terminal, LogCanonical, NotLc };

struct MpVerdict {
  Verdict verdict = Verdict::Terminal;
  // Present exactly when the field is singular at the origin.
  std::optional<RationalMatrix> linear;
};

// Machine-checkable tree certifying that a divisor germ is log canonical at
// the origin.  Leaves: SmoothLinear, ReducedSncMonomial,
// MonomialGenericHowald.  Inner nodes (one child each): Restriction,
// LowestPartReduction, PairSnc.  Every node re-checks by exact computation
// in verify_certificate.
struct Certificate {
  enum class Kind {
    SmoothLinear,
    ReducedSncMonomial,
    MonomialGenericHowald,
    Restriction,
    LowestPartReduction,
    PairSnc,
  };

  Kind kind = Kind::SmoothLinear;

  // SmoothLinear / ReducedSncMonomial: the recorded germ.
  std::optional<Polynomial> form;

  // MonomialGenericHowald: recorded support, general coefficients and lct.
  std::vector<MultiIndex> support;
  std::vector<Rational> lambdas;
  std::optional<Rational> lct_value;

  // Restriction: recurse on the subspace spanned by `restrict_to` after
  // pulling the coordinate factor prod_{j in factor_out} x_j out of f.
  IndexSet restrict_to;
  IndexSet factor_out;

  // LowestPartReduction: recurse on the w-weighted lowest part of f.
  WeightVector weights;

  // PairSnc: germ of the form unit * (smooth factor) * (reduced monomial),
  // from the nonsingular chart construction.  `transversality` records the
  // contraction of the field against the smooth factor at the origin.
  int smooth_index = -1;
  bool smooth_factor = false;
  std::optional<Rational> transversality;
  IndexSet boundary;

  std::unique_ptr<Certificate> child;

  Certificate() = default;
  Certificate(Certificate&&) = default;
  Certificate& operator=(Certificate&&) = default;

  Certificate clone() const;

  static Certificate smooth_linear(Polynomial form);
  static Certificate reduced_snc_monomial(Polynomial form);
  static Certificate monomial_generic_howald(std::vector<MultiIndex> support,
                                             std::vector<Rational> lambdas, Rational lct);
  static Certificate restriction(IndexSet I, IndexSet K, Certificate child);
  static Certificate lowest_part_reduction(WeightVector w, Certificate child);
  static Certificate pair_snc(int smooth_index, bool smooth_factor,
                              std::optional<Rational> transversality, IndexSet boundary,
                              Certificate child);
};

// Matrix of first-order coefficients at a singular point: A[i][j] is the
// coefficient of x_j in component i, so row i is the linear form attached
// to d/dx_i.  Rejects fields that do not vanish at the origin.
RationalMatrix linear_part(const VectorField& v);

// Terminal iff nonsingular at the origin; among singular germs, log
// canonical iff the linear part is non-nilpotent.
MpVerdict mp_classify(const VectorField& v);

// A singular log canonical germ admits no invariant divisor through the
// point: true iff the field is nonsingular at 0, or delta is absent, or
// delta's polynomial does not vanish at 0.
bool validate_pair(const VectorField& v, const std::optional<Polynomial>& delta);

// Free generators of the log tangent sheaf on the chart: x_i d/dx_i for
// boundary indices, d/dx_i otherwise.
std::vector<VectorField> log_generators(int dimension, const IndexSet& boundary);

// Determinant of the n x n polynomial matrix with rows (w, v_1, ..., v_{n-1});
// cuts out the tangency divisor of w against the distribution of the v_i.
Polynomial tangency_determinant(const VectorField& w, const std::vector<VectorField>& others);

// (prod_{j in R} x_j) * omega(v) for the logarithmic form
// omega = sum_{i in R} lambda_i dx_i/x_i + sum_{i not in R} lambda_i dx_i,
// computed without division.
Polynomial omega_contract(const VectorField& v, const LambdaVector& lambda,
                          const IndexSet& boundary);

// Same contraction with the field replaced by its linear part: rows A_i of
// the matrix in place of the components.
Polynomial f_from_matrix(const RationalMatrix& a, const LambdaVector& lambda,
                         const IndexSet& boundary);

// The n-1 generators of the annihilator of omega used by the chart
// construction: lambda_i E_pivot - lambda_pivot E_i for i != pivot, where
// E_j is the log generator in direction j.  Requires lambda[pivot] != 0.
std::vector<VectorField> log_annihilator_fields(int dimension, const LambdaVector& lambda,
                                                const IndexSet& boundary, int pivot);

struct Selection {
  LambdaVector lambda;
  Polynomial f;
  Certificate certificate;
};

// Coefficient selection for a non-nilpotent matrix: returns lambda (not all
// zero) and a certificate accepted by verify_certificate for
// f_from_matrix(a, lambda, boundary).  Deterministic for a fixed seed.
Selection select_lambda(const RationalMatrix& a, const IndexSet& boundary, std::uint64_t seed);

bool verify_certificate(const Polynomial& f, const Certificate& cert);
// Same, reporting the first failing check.
bool verify_certificate(const Polynomial& f, const Certificate& cert, std::string* why);

struct GammaResult {
  Polynomial gamma;      // the tangency divisor polynomial on the chart
  Polynomial certified;  // gamma, or delta*gamma when delta passes through 0
  Certificate certificate;
  int case_used = 0;  // 1 = singular germ, 2 = nonsingular germ
  LambdaVector lambda;
  int retries = 0;
};

// Chart construction of the boundary divisor: certifies (chart, certified)
// log canonical at the origin.  Singular germs go through select_lambda and
// a lowest-part reduction; nonsingular germs produce the reduced monomial
// germ with a transverse smooth factor when delta is present.
GammaResult gamma_construct(const VectorField& v, const IndexSet& boundary,
                            const std::optional<Polynomial>& delta, std::uint64_t seed);

// Text format: comma-separated component polynomials, e.g. "y^2, -x^2".
VectorField parse_vector_field(std::string_view text);
std::string to_string(const VectorField& v);

// Comma-separated rationals.
LambdaVector parse_lambda(std::string_view text);
// Comma-separated 1-based indices, returned 0-based and sorted.
IndexSet parse_boundary(std::string_view text, int dimension);

}  // namespace folia
