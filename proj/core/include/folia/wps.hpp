#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folia/foliation.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Homogeneous 1-form sum_i components[i] dX_i on a weighted projective
// space; components are polynomials in the homogeneous coordinates.
struct OneForm {
  std::vector<Polynomial> components;

  explicit OneForm(std::vector<Polynomial> components);

  int coordinate_count() const { return static_cast<int>(components.size()); }
  bool is_zero() const;
};

using GradedDegree = long;

// Weighted projective weights: positive, one per homogeneous coordinate.
void validate_wps_weights(const WeightVector& w, int coordinates);

// Common value deg_w(A_i) + w_i over the nonzero components; rejects forms
// that are not equi-weighted or are zero.
long form_weight(const OneForm& omega, const WeightVector& w);

// sum_i w_i X_i A_i: pairing against the weighted Euler field.
Polynomial euler_contraction(const OneForm& omega, const WeightVector& w);

// Surface case only (three weights): form_weight - (w0 + w1 + w2).
GradedDegree foliation_canonical_degree(const OneForm& omega, const WeightVector& w);

// O(d).O(e) on a weighted projective plane: d*e / (w0 w1 w2).
Rational self_intersection(GradedDegree d, GradedDegree e, const WeightVector& w);

// Affine chart at X_chart = 1 in cover coordinates: the dX_chart component
// is dropped, the others are restricted and renumbered.  The chart carries a
// cyclic quotient of order w_chart, recorded but not acted on.
struct AffineChartForm {
  int chart = 0;        // 0-based homogeneous coordinate index
  int group_order = 1;  // w_chart
  std::vector<Polynomial> components;
};

AffineChartForm dehomogenize(const OneForm& omega, int chart, const WeightVector& w);

// Annihilator of P dx + Q dy: the field Q d/dx - P d/dy.
VectorField annihilator_2d(const std::vector<Polynomial>& affine_form);

// Comma-separated component polynomials in the homogeneous coordinates.
OneForm parse_one_form(std::string_view text);
std::string to_string(const OneForm& omega);

}  // namespace folia
