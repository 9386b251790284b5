#include "folia/foliation.hpp"

#include <algorithm>
#include <sstream>

#include "folia/errors.hpp"
#include "folia/rng.hpp"

namespace folia {

VectorField::VectorField(int dimension_, std::vector<Polynomial> components_)
    : dimension(dimension_), components(std::move(components_)) {
  if (dimension < 1) throw DomainError("vector field dimension must be >= 1");
  if (static_cast<int>(components.size()) != dimension) {
    throw DomainError("vector field needs one component per variable");
  }
  for (const auto& c : components) {
    if (c.dimension() != dimension) throw DomainError("component dimension mismatch");
  }
}

bool VectorField::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

bool VectorField::singular_at_origin() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.constant_term() == 0; });
}

Polynomial VectorField::apply(const Polynomial& f) const {
  if (f.dimension() != dimension) throw DomainError("dimension mismatch in derivation");
  Polynomial acc(dimension);
  for (int i = 0; i < dimension; ++i) {
    if (components[i].is_zero()) continue;
    acc = acc + components[i] * f.derivative(i);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Certificates

Certificate Certificate::clone() const {
  Certificate out;
  out.kind = kind;
  out.form = form;
  out.support = support;
  out.lambdas = lambdas;
  out.lct_value = lct_value;
  out.restrict_to = restrict_to;
  out.factor_out = factor_out;
  out.weights = weights;
  out.smooth_index = smooth_index;
  out.smooth_factor = smooth_factor;
  out.transversality = transversality;
  out.boundary = boundary;
  if (child) out.child = std::make_unique<Certificate>(child->clone());
  return out;
}

Certificate Certificate::smooth_linear(Polynomial form) {
  Certificate c;
  c.kind = Kind::SmoothLinear;
  c.form = std::move(form);
  return c;
}

Certificate Certificate::reduced_snc_monomial(Polynomial form) {
  Certificate c;
  c.kind = Kind::ReducedSncMonomial;
  c.form = std::move(form);
  return c;
}

Certificate Certificate::monomial_generic_howald(std::vector<MultiIndex> support,
                                                 std::vector<Rational> lambdas, Rational lct) {
  Certificate c;
  c.kind = Kind::MonomialGenericHowald;
  c.support = std::move(support);
  c.lambdas = std::move(lambdas);
  c.lct_value = std::move(lct);
  return c;
}

Certificate Certificate::restriction(IndexSet I, IndexSet K, Certificate child) {
  Certificate c;
  c.kind = Kind::Restriction;
  c.restrict_to = std::move(I);
  c.factor_out = std::move(K);
  c.child = std::make_unique<Certificate>(std::move(child));
  return c;
}

Certificate Certificate::lowest_part_reduction(WeightVector w, Certificate child) {
  Certificate c;
  c.kind = Kind::LowestPartReduction;
  c.weights = std::move(w);
  c.child = std::make_unique<Certificate>(std::move(child));
  return c;
}

Certificate Certificate::pair_snc(int smooth_index, bool smooth_factor,
                                  std::optional<Rational> transversality, IndexSet boundary,
                                  Certificate child) {
  Certificate c;
  c.kind = Kind::PairSnc;
  c.smooth_index = smooth_index;
  c.smooth_factor = smooth_factor;
  c.transversality = std::move(transversality);
  c.boundary = std::move(boundary);
  c.child = std::make_unique<Certificate>(std::move(child));
  return c;
}

// ---------------------------------------------------------------------------
// Classification

RationalMatrix linear_part(const VectorField& v) {
  if (!v.singular_at_origin()) {
    throw DomainError("linear part requires a field singular at the origin");
  }
  const int n = v.dimension;
  RationalMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [e, c] : v.components[i].terms()) {
      int degree = 0;
      int var = -1;
      for (int j = 0; j < n && degree <= 1; ++j) {
        degree += e[j];
        if (e[j] == 1) var = j;
      }
      if (degree == 1) a.at(i, var) = c;
    }
  }
  return a;
}

MpVerdict mp_classify(const VectorField& v) {
  if (v.is_zero()) throw DomainError("the zero field does not define a foliation germ");
  MpVerdict out;
  if (!v.singular_at_origin()) {
    out.verdict = Verdict::Terminal;
    return out;
  }
  out.linear = linear_part(v);
  out.verdict = is_nilpotent(*out.linear) ? Verdict::NotLc : Verdict::LogCanonical;
  return out;
}

bool validate_pair(const VectorField& v, const std::optional<Polynomial>& delta) {
  const MpVerdict verdict = mp_classify(v);
  if (verdict.verdict == Verdict::NotLc) {
    throw DomainError("pair validation requires a terminal or log canonical germ");
  }
  if (verdict.verdict == Verdict::Terminal || !delta) return true;
  if (delta->dimension() != v.dimension) throw DomainError("divisor dimension mismatch");
  if (delta->is_zero()) throw DomainError("invariant divisor polynomial must be nonzero");
  return delta->constant_term() != 0;
}

std::vector<VectorField> log_generators(int dimension, const IndexSet& boundary) {
  validate_index_set(boundary, dimension);
  std::vector<VectorField> out;
  out.reserve(dimension);
  for (int i = 0; i < dimension; ++i) {
    std::vector<Polynomial> comps;
    comps.reserve(dimension);
    const bool logarithmic = std::binary_search(boundary.begin(), boundary.end(), i);
    for (int j = 0; j < dimension; ++j) {
      if (j != i) {
        comps.push_back(Polynomial::zero(dimension));
      } else {
        comps.push_back(logarithmic ? Polynomial::variable(dimension, i)
                                    : Polynomial::constant(dimension, 1));
      }
    }
    out.emplace_back(dimension, std::move(comps));
  }
  return out;
}

namespace {

Polynomial polynomial_determinant(const std::vector<const VectorField*>& rows, int n, int dim) {
  // g[S] = det of the submatrix on the first |S| rows and columns S,
  // expanded along its last row; division-free.
  std::vector<Polynomial> g(std::size_t(1) << n, Polynomial(dim));
  g[0] = Polynomial::constant(dim, 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    Polynomial acc(dim);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& entry = rows[row]->components[j];
      if (!entry.is_zero() && !g[mask & ~(1u << j)].is_zero()) {
        const Polynomial contrib = entry * g[mask & ~(1u << j)];
        acc = ((row + pos) % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++pos;
    }
    g[mask] = std::move(acc);
  }
  return g[(std::size_t(1) << n) - 1];
}

}  // namespace

Polynomial tangency_determinant(const VectorField& w, const std::vector<VectorField>& others) {
  const int n = w.dimension;
  if (static_cast<int>(others.size()) != n - 1) {
    throw DomainError("tangency needs exactly n-1 companion fields");
  }
  std::vector<const VectorField*> rows;
  rows.push_back(&w);
  for (const auto& v : others) {
    if (v.dimension != n) throw DomainError("companion field dimension mismatch");
    rows.push_back(&v);
  }
  return polynomial_determinant(rows, n, n);
}

Polynomial omega_contract(const VectorField& v, const LambdaVector& lambda,
                          const IndexSet& boundary) {
  const int n = v.dimension;
  if (static_cast<int>(lambda.size()) != n) throw DomainError("lambda length mismatch");
  validate_index_set(boundary, n);
  Polynomial acc(n);
  for (int i = 0; i < n; ++i) {
    if (lambda[i] == 0 || v.components[i].is_zero()) continue;
    IndexSet prod_vars;
    for (int j : boundary) {
      if (j != i) prod_vars.push_back(j);
    }
    acc = acc + (v.components[i] * coordinate_product(n, prod_vars)).scaled(lambda[i]);
  }
  return acc;
}

Polynomial f_from_matrix(const RationalMatrix& a, const LambdaVector& lambda,
                         const IndexSet& boundary) {
  const int n = a.order();
  std::vector<Polynomial> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) rows.push_back(a.row_linear_form(i));
  return omega_contract(VectorField(n, std::move(rows)), lambda, boundary);
}

std::vector<VectorField> log_annihilator_fields(int dimension, const LambdaVector& lambda,
                                                const IndexSet& boundary, int pivot) {
  if (static_cast<int>(lambda.size()) != dimension) throw DomainError("lambda length mismatch");
  validate_index_set(boundary, dimension);
  if (pivot < 0 || pivot >= dimension) throw DomainError("pivot out of range");
  if (lambda[pivot] == 0) throw DomainError("pivot coefficient must be nonzero");

  auto log_direction = [&](int j) {
    return std::binary_search(boundary.begin(), boundary.end(), j)
               ? Polynomial::variable(dimension, j)
               : Polynomial::constant(dimension, 1);
  };

  std::vector<VectorField> out;
  out.reserve(dimension - 1);
  for (int i = 0; i < dimension; ++i) {
    if (i == pivot) continue;
    std::vector<Polynomial> comps;
    comps.reserve(dimension);
    for (int j = 0; j < dimension; ++j) {
      if (j == pivot) {
        comps.push_back(log_direction(pivot).scaled(lambda[i]));
      } else if (j == i) {
        comps.push_back(log_direction(i).scaled(Rational(-lambda[pivot])));
      } else {
        comps.push_back(Polynomial::zero(dimension));
      }
    }
    out.emplace_back(dimension, std::move(comps));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient selection

namespace {

// First proper nonempty index set, ordered by (cardinality, lexicographic),
// whose principal submatrix is non-nilpotent.
std::optional<IndexSet> minimal_non_nilpotent_proper(const RationalMatrix& a) {
  const int n = a.order();
  for (int size = 1; size < n; ++size) {
    IndexSet subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      if (!is_nilpotent(principal_submatrix(a, subset))) return subset;
      int k = size - 1;
      while (k >= 0 && subset[k] == n - size + k) --k;
      if (k < 0) break;
      ++subset[k];
      for (int j = k + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

Selection select_lambda(const RationalMatrix& a, const IndexSet& boundary, std::uint64_t seed) {
  const int n = a.order();
  validate_index_set(boundary, n);
  if (is_nilpotent(a)) throw DomainError("coefficient selection requires a non-nilpotent matrix");

  if (n == 1) {
    LambdaVector lambda{Rational(1)};
    Polynomial f = f_from_matrix(a, lambda, boundary);
    Certificate cert = Certificate::smooth_linear(f);
    return {std::move(lambda), std::move(f), std::move(cert)};
  }

  if (boundary.empty()) {
    int row = -1;
    for (int i = 0; i < n && row < 0; ++i) {
      for (int j = 0; j < n; ++j) {
        if (a.at(i, j) != 0) {
          row = i;
          break;
        }
      }
    }
    LambdaVector lambda(n, Rational(0));
    lambda[row] = 1;
    Polynomial f = f_from_matrix(a, lambda, boundary);
    Certificate cert = Certificate::smooth_linear(f);
    return {std::move(lambda), std::move(f), std::move(cert)};
  }

  if (const auto I = minimal_non_nilpotent_proper(a)) {
    // Restrict to the non-nilpotent principal submatrix, pull the boundary
    // factors outside it out of f, and recurse.
    const RationalMatrix sub = principal_submatrix(a, *I);
    IndexSet child_boundary;
    for (std::size_t k = 0; k < I->size(); ++k) {
      if (std::binary_search(boundary.begin(), boundary.end(), (*I)[k])) {
        child_boundary.push_back(static_cast<int>(k));
      }
    }
    Selection child = select_lambda(sub, child_boundary, seed);
    LambdaVector lambda(n, Rational(0));
    for (std::size_t k = 0; k < I->size(); ++k) lambda[(*I)[k]] = child.lambda[k];
    IndexSet factored;
    std::set_difference(boundary.begin(), boundary.end(), I->begin(), I->end(),
                        std::back_inserter(factored));
    Polynomial f = f_from_matrix(a, lambda, boundary);
    Certificate cert = Certificate::restriction(*I, std::move(factored),
                                                std::move(child.certificate));
    return {std::move(lambda), std::move(f), std::move(cert)};
  }

  // Every proper principal submatrix is nilpotent: the matrix is a single
  // n-cycle with nonzero entries exactly on the cycle.
  const CycleClassification cls = classify_special(a);
  if (cls.kind != CycleClassification::Kind::CycleForm) {
    throw InternalError("non-nilpotent matrix under the hypothesis must be in cycle form");
  }
  std::vector<int> successor(n, -1);
  for (int k = 0; k < n; ++k) successor[cls.cycle[k]] = cls.cycle[(k + 1) % n];

  if (static_cast<int>(boundary.size()) < n) {
    int chosen = -1;
    for (int i : boundary) {
      if (!std::binary_search(boundary.begin(), boundary.end(), successor[i])) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) {
      throw InternalError("cycle must leave a proper boundary set");
    }
    LambdaVector lambda(n, Rational(0));
    lambda[chosen] = 1;
    Polynomial f = f_from_matrix(a, lambda, boundary);
    Certificate cert = Certificate::reduced_snc_monomial(f);
    return {std::move(lambda), std::move(f), std::move(cert)};
  }

  // Full boundary: a general combination of the cycle monomials.
  Rng rng(seed);
  LambdaVector lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = Rational(rng.uniform(1, 1000000));
  Polynomial f = f_from_matrix(a, lambda, boundary);
  const LctOutcome lct = lct_monomial(MonomialIdeal(n, f.support()));
  if (lct.infinite || lct.result->value != 1) {
    throw InternalError("cycle support must have log canonical threshold one");
  }
  Certificate cert =
      Certificate::monomial_generic_howald(f.support(), lambda, lct.result->value);
  return {std::move(lambda), std::move(f), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Certificate verification

namespace {

bool reject(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// f / prod_{j in K} x_j when the division is exact.
std::optional<Polynomial> divide_by_coordinates(const Polynomial& f, const IndexSet& K) {
  Polynomial out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    MultiIndex reduced = e;
    for (int j : K) {
      if (reduced[j] < 1) return std::nullopt;
      reduced[j] -= 1;
    }
    out.add_term(reduced, c);
  }
  return out;
}

bool verify_node(const Polynomial& f, const Certificate& cert, std::string* why) {
  switch (cert.kind) {
    case Certificate::Kind::SmoothLinear: {
      if (cert.child) throw DomainError("malformed certificate: leaf with a child");
      if (f.is_zero()) return reject(why, "smooth-linear: zero polynomial");
      const WeightVector ones(f.dimension(), 1);
      if (f.weighted_order(ones) != std::optional<long long>(1)) {
        return reject(why, "smooth-linear: lowest part is not a linear form");
      }
      return true;
    }
    case Certificate::Kind::ReducedSncMonomial: {
      if (cert.child) throw DomainError("malformed certificate: leaf with a child");
      if (f.term_count() != 1) {
        return reject(why, "reduced-snc: not a single monomial");
      }
      for (int e : f.terms().begin()->first) {
        if (e > 1) return reject(why, "reduced-snc: monomial is not squarefree");
      }
      return true;
    }
    case Certificate::Kind::MonomialGenericHowald: {
      if (cert.child) throw DomainError("malformed certificate: leaf with a child");
      if (f.is_zero()) return reject(why, "howald: zero polynomial");
      if (cert.lambdas.empty()) throw DomainError("malformed certificate: no coefficients");
      for (const auto& l : cert.lambdas) {
        if (l == 0) return reject(why, "howald: recorded coefficient is zero");
      }
      const MonomialIdeal ideal(f.dimension(), f.support());
      const LctOutcome out = lct_monomial(ideal);
      if (out.infinite) return true;  // germ misses the origin
      if (!out.result->verify(ideal)) {
        return reject(why, "howald: lct witnesses failed their re-check");
      }
      if (out.result->value < 1) {
        return reject(why, "howald: threshold below one");
      }
      return true;
    }
    case Certificate::Kind::Restriction: {
      if (!cert.child) throw DomainError("malformed certificate: restriction without child");
      validate_index_set(cert.restrict_to, f.dimension());
      validate_index_set(cert.factor_out, f.dimension());
      if (cert.restrict_to.empty()) {
        throw DomainError("malformed certificate: empty restriction set");
      }
      for (int j : cert.factor_out) {
        if (std::binary_search(cert.restrict_to.begin(), cert.restrict_to.end(), j)) {
          throw DomainError("malformed certificate: factor set meets restriction set");
        }
      }
      const auto quotient = divide_by_coordinates(f, cert.factor_out);
      if (!quotient) return reject(why, "restriction: coordinate factor does not divide");
      for (int j : cert.factor_out) {
        bool reduced = false;
        for (const auto& [e, c] : quotient->terms()) {
          if (e[j] == 0) {
            reduced = true;
            break;
          }
        }
        if (!reduced) return reject(why, "restriction: quotient still divisible by a factor");
      }
      if (quotient->is_zero()) return reject(why, "restriction: zero quotient");
      const Polynomial restricted = restrict_to_subspace(*quotient, cert.restrict_to);
      return verify_node(restricted, *cert.child, why);
    }
    case Certificate::Kind::LowestPartReduction: {
      if (!cert.child) throw DomainError("malformed certificate: reduction without child");
      if (f.is_zero()) return reject(why, "lowest-part: zero polynomial");
      validate_weights(cert.weights, f.dimension());
      return verify_node(f.weighted_lowest_part(cert.weights), *cert.child, why);
    }
    case Certificate::Kind::PairSnc: {
      if (!cert.child) throw DomainError("malformed certificate: pair without child");
      if (cert.smooth_index < 0 || cert.smooth_index >= f.dimension()) {
        throw DomainError("malformed certificate: smooth index out of range");
      }
      if (cert.smooth_factor != cert.transversality.has_value()) {
        throw DomainError("malformed certificate: transversality record mismatch");
      }
      if (cert.transversality && *cert.transversality == 0) {
        return reject(why, "pair: recorded transversality is zero");
      }
      return verify_node(f, *cert.child, why);
    }
  }
  throw DomainError("malformed certificate: unknown node kind");
}

}  // namespace

bool verify_certificate(const Polynomial& f, const Certificate& cert) {
  return verify_node(f, cert, nullptr);
}

bool verify_certificate(const Polynomial& f, const Certificate& cert, std::string* why) {
  return verify_node(f, cert, why);
}

// ---------------------------------------------------------------------------
// Chart construction

GammaResult gamma_construct(const VectorField& v, const IndexSet& boundary,
                            const std::optional<Polynomial>& delta, std::uint64_t seed) {
  const int n = v.dimension;
  validate_index_set(boundary, n);
  if (delta) {
    if (delta->dimension() != n) throw DomainError("divisor dimension mismatch");
    if (delta->is_zero()) throw DomainError("invariant divisor polynomial must be nonzero");
  }
  const MpVerdict verdict = mp_classify(v);
  if (verdict.verdict == Verdict::NotLc) {
    throw DomainError("foliation germ is not log canonical (nilpotent linear part)");
  }
  if (!validate_pair(v, delta)) {
    throw DomainError("invariant divisor passes through the singular point");
  }
  const WeightVector ones(n, 1);

  if (verdict.verdict == Verdict::LogCanonical) {
    const RationalMatrix& a = *verdict.linear;
    std::string diagnostics;
    for (int attempt = 0; attempt < 16; ++attempt) {
      Selection sel = select_lambda(a, boundary, seed + static_cast<std::uint64_t>(attempt));
      Polynomial gamma = omega_contract(v, sel.lambda, boundary);
      if (gamma.is_zero()) {
        diagnostics = "contraction vanished identically";
        continue;
      }
      if (gamma.weighted_lowest_part(ones) != sel.f) {
        diagnostics = "lowest part of the contraction differs from the linear-part polynomial";
        continue;
      }
      Certificate cert = Certificate::lowest_part_reduction(ones, std::move(sel.certificate));
      std::string why;
      if (!verify_certificate(gamma, cert, &why)) {
        diagnostics = "certificate rejected: " + why;
        continue;
      }
      Polynomial certified = gamma;
      return GammaResult{std::move(gamma),          std::move(certified), std::move(cert), 1,
                         std::move(sel.lambda), attempt};
    }
    throw InternalError("coefficient selection exhausted 16 draws: " + diagnostics);
  }

  // Nonsingular germ: contract against the form that keeps only the first
  // direction the field actually moves in.
  int s = -1;
  for (int i = 0; i < n && s < 0; ++i) {
    if (v.components[i].constant_term() != 0) s = i;
  }
  LambdaVector lambda(n, Rational(0));
  lambda[s] = 1;
  Polynomial gamma = omega_contract(v, lambda, boundary);

  const bool through_origin = delta && delta->constant_term() == 0;
  std::optional<Rational> transversality;
  Polynomial certified = gamma;
  if (through_origin) {
    const Rational t0 = v.apply(*delta).constant_term();
    if (t0 == 0) {
      throw DomainError("invariant divisor is not transverse to the foliation at the origin");
    }
    transversality = t0;
    certified = (*delta) * gamma;
  }

  Certificate leaf = Certificate::reduced_snc_monomial(certified.weighted_lowest_part(ones));
  Certificate cert = Certificate::pair_snc(
      s, through_origin, std::move(transversality), boundary,
      Certificate::lowest_part_reduction(ones, std::move(leaf)));
  std::string why;
  if (!verify_certificate(certified, cert, &why)) {
    throw DomainError("chart germ is not reduced normal crossings at the origin: " + why);
  }
  return GammaResult{std::move(gamma), std::move(certified), std::move(cert), 2,
                     std::move(lambda), 0};
}

// ---------------------------------------------------------------------------
// Text formats

VectorField parse_vector_field(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    pieces.push_back(text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  const int n = static_cast<int>(pieces.size());
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (const auto& piece : pieces) comps.push_back(parse_polynomial(piece, n));
  return VectorField(n, std::move(comps));
}

std::string to_string(const VectorField& v) {
  std::ostringstream out;
  for (int i = 0; i < v.dimension; ++i) {
    if (i) out << ", ";
    out << to_string(v.components[i]);
  }
  return out.str();
}

LambdaVector parse_lambda(std::string_view text) {
  LambdaVector out;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string_view piece = trim(text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (piece.empty()) throw ParseError("empty coefficient", start + 1);
    out.push_back(rational_from_string(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

IndexSet parse_boundary(std::string_view text, int dimension) {
  IndexSet out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    std::string_view piece = trim(text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (piece.empty()) throw ParseError("empty boundary index", start + 1);
    long value = 0;
    for (char c : piece) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("boundary indices must be positive integers", start + 1);
      }
      value = value * 10 + (c - '0');
      if (value > dimension + 1) break;
    }
    if (value < 1 || value > dimension) {
      throw ParseError("boundary index out of range 1.." + std::to_string(dimension), start + 1);
    }
    out.push_back(static_cast<int>(value) - 1);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParseError("duplicate boundary index", 1);
  }
  return out;
}

}  // namespace folia
