#include "folia/wps.hpp"

#include <algorithm>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

OneForm::OneForm(std::vector<Polynomial> components_) : components(std::move(components_)) {
  if (components.empty()) throw DomainError("a 1-form needs at least one component");
  const int n = static_cast<int>(components.size());
  for (const auto& c : components) {
    if (c.dimension() != n) {
      throw DomainError("form components must live in the homogeneous coordinates");
    }
  }
}

bool OneForm::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

void validate_wps_weights(const WeightVector& w, int coordinates) {
  if (static_cast<int>(w.size()) != coordinates) {
    throw DomainError("one weight per homogeneous coordinate required");
  }
  for (int wi : w) {
    if (wi < 1) throw DomainError("weights must be positive");
  }
}

long form_weight(const OneForm& omega, const WeightVector& w) {
  const int n = omega.coordinate_count();
  validate_wps_weights(w, n);
  if (omega.is_zero()) throw DomainError("the zero form has no weight");
  std::optional<long> weight;
  for (int i = 0; i < n; ++i) {
    const Polynomial& c = omega.components[i];
    if (c.is_zero()) continue;
    const auto low = c.weighted_order(w);
    // equi-weighted means each component is w-homogeneous ...
    for (const auto& [e, coeff] : c.terms()) {
      long long deg = 0;
      for (int j = 0; j < n; ++j) deg += static_cast<long long>(w[j]) * e[j];
      if (deg != *low) throw DomainError("form component is not weighted-homogeneous");
    }
    // ... and deg_w(A_i) + w_i agrees across components.
    const long candidate = static_cast<long>(*low) + w[i];
    if (weight && *weight != candidate) {
      throw DomainError("form components have inconsistent weights");
    }
    weight = candidate;
  }
  return *weight;
}

Polynomial euler_contraction(const OneForm& omega, const WeightVector& w) {
  const int n = omega.coordinate_count();
  validate_wps_weights(w, n);
  Polynomial acc(n);
  for (int i = 0; i < n; ++i) {
    if (omega.components[i].is_zero()) continue;
    acc = acc + (Polynomial::variable(n, i) * omega.components[i]).scaled(w[i]);
  }
  return acc;
}

GradedDegree foliation_canonical_degree(const OneForm& omega, const WeightVector& w) {
  if (omega.coordinate_count() != 3) {
    throw DomainError("canonical degree implemented for weighted projective planes only");
  }
  const long weight = form_weight(omega, w);
  return weight - (w[0] + w[1] + w[2]);
}

Rational self_intersection(GradedDegree d, GradedDegree e, const WeightVector& w) {
  if (w.size() != 3) {
    throw DomainError("self-intersection implemented for weighted projective planes only");
  }
  validate_wps_weights(w, 3);
  Rational out(Integer(d) * Integer(e), Integer(w[0]) * Integer(w[1]) * Integer(w[2]));
  out.canonicalize();
  return out;
}

AffineChartForm dehomogenize(const OneForm& omega, int chart, const WeightVector& w) {
  const int n = omega.coordinate_count();
  validate_wps_weights(w, n);
  if (chart < 0 || chart >= n) throw DomainError("chart index out of range");

  IndexSet keep;
  for (int i = 0; i < n; ++i) {
    if (i != chart) keep.push_back(i);
  }
  // Setting X_chart = 1 keeps every exponent integral; the chart is the
  // order-w_chart cyclic cover coordinates when w_chart > 1.
  AffineChartForm out;
  out.chart = chart;
  out.group_order = w[chart];
  for (int i = 0; i < n; ++i) {
    if (i == chart) continue;
    Polynomial affine(n - 1);
    for (const auto& [e, c] : omega.components[i].terms()) {
      MultiIndex reduced(n - 1);
      for (std::size_t k = 0; k < keep.size(); ++k) reduced[k] = e[keep[k]];
      affine.add_term(reduced, c);
    }
    out.components.push_back(std::move(affine));
  }
  return out;
}

VectorField annihilator_2d(const std::vector<Polynomial>& affine_form) {
  if (affine_form.size() != 2) throw DomainError("annihilator is for two-variable forms");
  for (const auto& c : affine_form) {
    if (c.dimension() != 2) throw DomainError("annihilator components must be bivariate");
  }
  if (affine_form[0].is_zero() && affine_form[1].is_zero()) {
    throw DomainError("the zero form has no annihilator field");
  }
  std::vector<Polynomial> comps{affine_form[1], -affine_form[0]};
  return VectorField(2, std::move(comps));
}

OneForm parse_one_form(std::string_view text) {
  const VectorField as_field = parse_vector_field(text);
  return OneForm(as_field.components);
}

std::string to_string(const OneForm& omega) {
  std::ostringstream out;
  for (std::size_t i = 0; i < omega.components.size(); ++i) {
    if (i) out << ", ";
    out << to_string(omega.components[i]);
  }
  return out.str();
}

}  // namespace folia
