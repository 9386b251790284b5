#include "folia/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw DomainError("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& c) {
  Polynomial p(dimension);
  p.add_term(MultiIndex(dimension, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dimension, int index) {
  if (index < 0 || index >= dimension) throw DomainError("variable index out of range");
  MultiIndex e(dimension, 0);
  e[index] = 1;
  return monomial(dimension, std::move(e), 1);
}

Polynomial Polynomial::monomial(int dimension, MultiIndex exponents, const Rational& c) {
  Polynomial p(dimension);
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(MultiIndex(dimension_, 0));
}

std::vector<MultiIndex> Polynomial::support() const {
  std::vector<MultiIndex> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

long Polynomial::total_degree() const {
  long best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, std::accumulate(e.begin(), e.end(), 0L));
  }
  return best;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != dimension_) {
    throw DomainError("exponent vector length does not match dimension");
  }
  for (int e : exponents) {
    if (e < 0) throw DomainError("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dimension_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (dimension_ != rhs.dimension_) throw DomainError("dimension mismatch in +");
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  if (dimension_ != rhs.dimension_) throw DomainError("dimension mismatch in -");
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, Rational(-c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (dimension_ != rhs.dimension_) throw DomainError("dimension mismatch in *");
  Polynomial out(dimension_);
  MultiIndex e(dimension_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < dimension_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(dimension_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, Rational(k * c));
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return dimension_ == rhs.dimension_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= dimension_) throw DomainError("derivative index out of range");
  Polynomial out(dimension_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    MultiIndex d = e;
    d[index] -= 1;
    out.add_term(d, Rational(c * e[index]));
  }
  return out;
}

std::optional<long long> Polynomial::weighted_order(const WeightVector& w) const {
  validate_weights(w, dimension_);
  if (terms_.empty()) return std::nullopt;
  std::optional<long long> best;
  for (const auto& [e, c] : terms_) {
    long long v = 0;
    for (int i = 0; i < dimension_; ++i) v += static_cast<long long>(w[i]) * e[i];
    if (!best || v < *best) best = v;
  }
  return best;
}

Polynomial Polynomial::weighted_lowest_part(const WeightVector& w) const {
  const auto ord = weighted_order(w);
  if (!ord) throw DomainError("weighted lowest part of the zero polynomial");
  Polynomial out(dimension_);
  for (const auto& [e, c] : terms_) {
    long long v = 0;
    for (int i = 0; i < dimension_; ++i) v += static_cast<long long>(w[i]) * e[i];
    if (v == *ord) out.terms_.emplace(e, c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dimension_) {
    throw DomainError("evaluation point length does not match dimension");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dimension_; ++i) {
      if (e[i] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    acc += term;
  }
  return acc;
}

void validate_weights(const WeightVector& w, int dimension) {
  if (static_cast<int>(w.size()) != dimension) {
    throw DomainError("weight vector length does not match dimension");
  }
  for (int wi : w) {
    if (wi < 1) throw DomainError("weights must be positive");
  }
}

void validate_index_set(const IndexSet& s, int dimension) {
  int prev = -1;
  for (int i : s) {
    if (i <= prev) throw DomainError("index set must be strictly increasing");
    if (i < 0 || i >= dimension) throw DomainError("index out of range");
    prev = i;
  }
}

Polynomial restrict_to_subspace(const Polynomial& p, const IndexSet& keep) {
  validate_index_set(keep, p.dimension());
  if (keep.empty()) throw DomainError("cannot restrict to the empty variable set");
  Polynomial out(static_cast<int>(keep.size()));
  MultiIndex reduced(keep.size());
  for (const auto& [e, c] : p.terms()) {
    bool vanishes = false;
    std::size_t pos = 0;
    for (int i = 0; i < p.dimension(); ++i) {
      const bool kept = pos < keep.size() && keep[pos] == i;
      if (kept) {
        reduced[pos++] = e[i];
      } else if (e[i] > 0) {
        vanishes = true;
        break;
      }
    }
    if (!vanishes) out.add_term(reduced, c);
  }
  return out;
}

Polynomial coordinate_product(int dimension, const IndexSet& vars) {
  validate_index_set(vars, dimension);
  MultiIndex e(dimension, 0);
  for (int i : vars) e[i] = 1;
  return Polynomial::monomial(dimension, std::move(e), 1);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int dimension) : text_(text), dim_(dimension) {
    if (dimension < 1) throw DomainError("polynomial dimension must be >= 1");
  }

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    Polynomial acc(dim_);
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      ++pos_;
    } else if (c == '\0') {
      fail("empty polynomial");
    }
    acc = acc + parse_term(negative);
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc = acc + parse_term(c == '-');
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_term(bool negative) {
    Polynomial prod = parse_atom();
    while (peek() == '*') {
      ++pos_;
      prod = prod * parse_atom();
    }
    return negative ? -prod : prod;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (c == 'x' || c == 'y' || c == 'z') return parse_variable();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_rational() {
    Integer num = parse_integer();
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return Polynomial::constant(dim_, r);
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial parse_variable() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = text_[pos_++];
    int index = -1;
    if (c == 'x' && pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      long v = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (v < 1) throw ParseError("variable index must be >= 1", start + 1);
      index = static_cast<int>(v) - 1;
    } else {
      // bare x / y / z aliases, legal only in dimension <= 3
      if (dim_ > 3) {
        throw ParseError(std::string("alias '") + c + "' requires dimension <= 3", at + 1);
      }
      index = c == 'x' ? 0 : c == 'y' ? 1 : 2;
    }
    if (index >= dim_) {
      throw ParseError("unknown variable: index exceeds dimension " + std::to_string(dim_),
                       at + 1);
    }
    int exponent = 1;
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      Integer e = parse_integer();
      if (e < 1 || e > 1000000) fail("exponent out of range");
      exponent = static_cast<int>(e.get_si());
    }
    MultiIndex exps(dim_, 0);
    exps[index] = exponent;
    return Polynomial::monomial(dim_, std::move(exps), 1);
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int dimension) {
  return PolyParser(text, dimension).parse();
}

std::string variable_name(int dimension, int index) {
  if (dimension <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return names[index];
  }
  return "x" + std::to_string(index + 1);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending graded-lex
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool has_vars = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    bool printed_coeff = false;
    if (!has_vars || mag != 1) {
      out << to_string(mag);
      printed_coeff = true;
    }
    if (has_vars) {
      bool first_var = true;
      for (int i = 0; i < p.dimension(); ++i) {
        if (e[i] == 0) continue;
        if (printed_coeff || !first_var) out << "*";
        out << variable_name(p.dimension(), i);
        if (e[i] > 1) out << "^" << e[i];
        first_var = false;
        printed_coeff = true;
      }
    }
  }
  return out.str();
}

}  // namespace folia
