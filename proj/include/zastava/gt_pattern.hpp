#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "zastava/composition.hpp"
#include "zastava/rational.hpp"
#include "zastava/spec_env.hpp"

namespace zastava {

// Gelfand-Tsetlin pattern: nonnegative entries d_{ij}^{(a)} for
// n-1 >= i >= j >= 1, 1 <= a <= p_j, subject to column monotonicity
// d_{kj}^{(a)} >= d_{ij}^{(a)} for i >= k >= j.  These simultaneously label
// the basis of the Gelfand-Tsetlin module and the torus fixed points of the
// based quasiflag spaces, with degree d_i = sum of row i.
//
// Entries are stored flat, rows in increasing i, cells (i,j) in increasing j,
// copies a = 1..p_j contiguous.  Accessors are 1-based to match the algebra.
struct GTPattern {
  Composition pi;
  std::vector<int> cells;

  GTPattern() = default;
  explicit GTPattern(const Composition& comp);

  int at(int i, int j, int a) const { return cells.at(index(i, j, a)); }
  int& at(int i, int j, int a) { return cells.at(index(i, j, a)); }

  std::size_t index(int i, int j, int a) const;

  bool operator==(const GTPattern& o) const { return cells == o.cells; }
  // Patterns are only compared within one composition.
  auto operator<=>(const GTPattern& o) const { return cells <=> o.cells; }
};

// row sums (d_1, ..., d_{n-1})
DegreeVector degree_of(const GTPattern& pat);

// Column monotonicity + nonnegativity.
bool is_valid_pattern(const GTPattern& pat);

// All patterns with the given row sums, in lexicographic order of the flat
// entry vector.  Throws if |d| != n-1.
std::vector<GTPattern> enumerate_patterns(const Composition& pi, const DegreeVector& d);

// p_{ij}^{(a)} = hbar*d_{ij}^{(a)} - x_{p_1+...+p_{j-1}+a} for i <= n-1.
// Row i = n carries no pattern entries; its value is -x_{p_1+...+p_{j-1}+a},
// which is what lambda_{nj}^{(a)} = hbar^{-1} x + j - 1 amounts to under
// lambda = -hbar^{-1} p + j - 1.  This keeps products over rows i and i+1
// uniform in the matrix-coefficient formulas.
Rat p_value(const GTPattern& pat, int i, int j, int a, const SpecEnv& env);

// Based quasiflag space dimension sum_i d_i (p_i + p_{i+1}); the unbased
// space adds dim(G/P) = sum_{i<j} p_i p_j.
long quasiflag_dimension(const Composition& pi, const DegreeVector& d, bool based);

// Canonical string key "i,j:v1 v2;..." used in JSON coefficient maps.
std::string pattern_key(const GTPattern& pat);

// {"pi":[...], "rows":{"i,j":[d^{(1)},...,d^{(p_j)}]}}
nlohmann::json pattern_to_json(const GTPattern& pat);

// A weight-space basis: the patterns of one degree plus index lookup.
struct PatternSpace {
  Composition pi;
  DegreeVector degree;
  std::vector<GTPattern> basis;
  std::map<GTPattern, int> index;

  PatternSpace() = default;
  PatternSpace(const Composition& comp, const DegreeVector& d);

  int dim() const { return static_cast<int>(basis.size()); }
  int find(const GTPattern& pat) const {
    auto it = index.find(pat);
    return it == index.end() ? -1 : it->second;
  }
};

}  // namespace zastava
