#include "folia/matrix.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace folia {

RationalMatrix::RationalMatrix(int order)
    : order_(order), entries_(static_cast<std::size_t>(order) * order, Rational(0)) {
  if (order < 1) throw DomainError("matrix order must be >= 1");
}

RationalMatrix RationalMatrix::identity(int order) {
  RationalMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return r == 0; });
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (order_ != rhs.order_) throw DomainError("matrix order mismatch");
  RationalMatrix out(order_);
  for (int i = 0; i < order_; ++i) {
    for (int k = 0; k < order_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < order_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (order_ != rhs.order_) throw DomainError("matrix order mismatch");
  RationalMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return order_ == rhs.order_ && entries_ == rhs.entries_;
}

Polynomial RationalMatrix::row_linear_form(int i) const {
  Polynomial form(order_);
  MultiIndex e(order_, 0);
  for (int j = 0; j < order_; ++j) {
    if (at(i, j) == 0) continue;
    e[j] = 1;
    form.add_term(e, at(i, j));
    e[j] = 0;
  }
  return form;
}

HypothesisViolated::HypothesisViolated(IndexSet witness)
    : DomainError([&witness] {
        std::ostringstream msg;
        msg << "proper principal submatrix {";
        for (std::size_t k = 0; k < witness.size(); ++k) {
          if (k) msg << ",";
          msg << witness[k] + 1;
        }
        msg << "} is not nilpotent";
        return msg.str();
      }()),
      witness_(std::move(witness)) {}

bool is_nilpotent(const RationalMatrix& a) {
  // A is nilpotent iff A^n = 0; square until the exponent reaches n.
  RationalMatrix power = a;
  int exponent = 1;
  while (true) {
    if (power.is_zero()) return true;
    if (exponent >= a.order()) return false;
    power = power * power;
    exponent *= 2;
  }
}

RationalMatrix principal_submatrix(const RationalMatrix& a, const IndexSet& I) {
  validate_index_set(I, a.order());
  if (I.empty()) throw DomainError("principal submatrix needs a nonempty index set");
  RationalMatrix out(static_cast<int>(I.size()));
  for (std::size_t i = 0; i < I.size(); ++i)
    for (std::size_t j = 0; j < I.size(); ++j) out.at(i, j) = a.at(I[i], I[j]);
  return out;
}

bool Digraph::has_edge(int i, int j) const {
  const auto& s = successors[i];
  return std::find(s.begin(), s.end(), j) != s.end();
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < order; ++i)
    for (int j : successors[i]) out.emplace_back(i, j);
  return out;
}

Digraph adjacency_graph(const RationalMatrix& a) {
  Digraph g;
  g.order = a.order();
  g.successors.resize(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (a.at(i, j) != 0) g.successors[i].push_back(j);
  return g;
}

std::optional<int> shortest_cycle_length(const RationalMatrix& a) {
  const Digraph g = adjacency_graph(a);
  std::optional<int> best;
  // shortest cycle through each start vertex via BFS
  for (int start = 0; start < g.order; ++start) {
    std::vector<int> dist(g.order, -1);
    std::deque<int> queue;
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.successors[u]) {
        if (v == start) {
          int len = dist[u] + 1;
          if (!best || len < *best) best = len;
        } else if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return best;
}

CycleClassification classify_special(const RationalMatrix& a) {
  const int n = a.order();
  if (n > 16) throw DomainError("hypothesis check is exhaustive; order capped at 16");
  // Exact hypothesis check over all nonempty proper subsets, smallest first.
  for (int size = 1; size < n; ++size) {
    std::vector<int> subset(size);
    // iterate subsets of given size in lexicographic order
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      if (!is_nilpotent(principal_submatrix(a, subset))) {
        throw HypothesisViolated(subset);
      }
      int k = size - 1;
      while (k >= 0 && subset[k] == n - size + k) --k;
      if (k < 0) break;
      ++subset[k];
      for (int j = k + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }

  CycleClassification out;
  if (is_nilpotent(a)) {
    out.kind = CycleClassification::Kind::Nilpotent;
    return out;
  }

  // Non-nilpotent under the hypothesis: the graph must be a single n-cycle.
  // Read the successor of each row and walk it from vertex 0.
  std::vector<int> successor(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == 0) continue;
      if (successor[i] != -1) {
        throw InternalError("cycle classification: row with two nonzero entries");
      }
      successor[i] = j;
    }
    if (successor[i] == -1) {
      throw InternalError("cycle classification: zero row in a non-nilpotent matrix");
    }
  }
  out.kind = CycleClassification::Kind::CycleForm;
  out.cycle.reserve(n);
  std::vector<bool> seen(n, false);
  int v = 0;
  for (int step = 0; step < n; ++step) {
    if (seen[v]) throw InternalError("cycle classification: walk revisited a vertex");
    seen[v] = true;
    out.cycle.push_back(v);
    out.entries.push_back(a.at(v, successor[v]));
    v = successor[v];
  }
  if (v != 0) throw InternalError("cycle classification: walk did not close");
  return out;
}

RationalMatrix matrix_from_cycle_form(int order, const std::vector<int>& cycle,
                                      const std::vector<Rational>& entries) {
  if (static_cast<int>(cycle.size()) != order || entries.size() != cycle.size()) {
    throw DomainError("cycle data does not match the order");
  }
  RationalMatrix out(order);
  for (int k = 0; k < order; ++k) {
    out.at(cycle[k], cycle[(k + 1) % order]) = entries[k];
  }
  return out;
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  const int n = a.order();
  // Entries of tI - A as univariate polynomials in t.
  std::vector<Polynomial> cell;
  cell.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial p(1);
      if (i == j) p.add_term({1}, 1);
      p.add_term({0}, Rational(-a.at(i, j)));
      cell.push_back(std::move(p));
    }
  }
  // g[S] = det of the submatrix on the first |S| rows and columns S,
  // expanded along the last row.  Division-free.
  std::vector<Polynomial> g(std::size_t(1) << n, Polynomial(1));
  g[0] = Polynomial::constant(1, 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    Polynomial acc(1);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& entry = cell[static_cast<std::size_t>(row) * n + j];
      if (!entry.is_zero()) {
        Polynomial contrib = entry * g[mask & ~(1u << j)];
        // sign (-1)^{row + pos}
        acc = ((row + pos) % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++pos;
    }
    g[mask] = std::move(acc);
  }
  return g[(std::size_t(1) << n) - 1];
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string_view row_text =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::vector<Rational> row;
    std::size_t cell_start = 0;
    while (cell_start <= row_text.size()) {
      std::size_t cell_end = row_text.find(',', cell_start);
      std::string_view cell = trim(row_text.substr(
          cell_start,
          cell_end == std::string_view::npos ? std::string_view::npos : cell_end - cell_start));
      if (cell.empty()) throw ParseError("empty matrix entry", start + cell_start + 1);
      row.push_back(rational_from_string(cell));
      if (cell_end == std::string_view::npos) break;
      cell_start = cell_end + 1;
    }
    rows.push_back(std::move(row));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  const int n = static_cast<int>(rows.size());
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ParseError("matrix is not square", 1);
    }
    for (int j = 0; j < n; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

std::string to_string(const RationalMatrix& a) {
  std::ostringstream out;
  for (int i = 0; i < a.order(); ++i) {
    if (i) out << ";";
    for (int j = 0; j < a.order(); ++j) {
      if (j) out << ",";
      out << to_string(a.at(i, j));
    }
  }
  return out.str();
}

}  // namespace folia
