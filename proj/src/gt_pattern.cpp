#include "zastava/gt_pattern.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace zastava {

std::vector<DegreeVector> degree_vectors_up_to(int length, int cap) {
  std::vector<DegreeVector> out;
  DegreeVector cur(static_cast<std::size_t>(length), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v + used <= cap; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, used + v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
    const int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return out;
}

GTPattern::GTPattern(const Composition& comp) : pi(comp) {
  std::size_t total = 0;
  for (int i = 1; i <= pi.n() - 1; ++i) total += static_cast<std::size_t>(pi.offset(i));
  cells.assign(total, 0);
}

std::size_t GTPattern::index(int i, int j, int a) const {
  const int n = pi.n();
  if (i < 1 || i > n - 1 || j < 1 || j > i || a < 1 || a > pi.p(j))
    throw std::out_of_range("GTPattern: index out of range");
  std::size_t base = 0;
  for (int r = 1; r < i; ++r) base += static_cast<std::size_t>(pi.offset(r));
  return base + static_cast<std::size_t>(pi.offset(j - 1)) + static_cast<std::size_t>(a - 1);
}

DegreeVector degree_of(const GTPattern& pat) {
  const int n = pat.pi.n();
  DegreeVector d(static_cast<std::size_t>(n - 1), 0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      for (int a = 1; a <= pat.pi.p(j); ++a) d[static_cast<std::size_t>(i - 1)] += pat.at(i, j, a);
  return d;
}

bool is_valid_pattern(const GTPattern& pat) {
  const int n = pat.pi.n();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      for (int a = 1; a <= pat.pi.p(j); ++a) {
        if (pat.at(i, j, a) < 0) return false;
        if (i > j && pat.at(i - 1, j, a) < pat.at(i, j, a)) return false;
      }
  return true;
}

std::vector<GTPattern> enumerate_patterns(const Composition& pi, const DegreeVector& d) {
  const int n = pi.n();
  if (static_cast<int>(d.size()) != n - 1)
    throw std::invalid_argument("enumerate_patterns: degree vector length must be n-1");

  std::vector<GTPattern> out;
  if (!nonnegative(d)) return out;

  GTPattern cur(pi);
  // Row by row; each cell is capped by the same cell one row up (when it
  // exists) and by the remaining row budget.
  std::function<void(int)> rec_row = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    // cells of row i in flat order
    std::vector<std::pair<int, int>> cells;  // (j, a)
    for (int j = 1; j <= i; ++j)
      for (int a = 1; a <= pi.p(j); ++a) cells.emplace_back(j, a);

    std::function<void(std::size_t, int)> rec_cell = [&](std::size_t ci, int remaining) {
      if (ci == cells.size()) {
        if (remaining == 0) rec_row(i + 1);
        return;
      }
      auto [j, a] = cells[ci];
      int hi = remaining;
      if (i > j) hi = std::min(hi, cur.at(i - 1, j, a));
      for (int v = 0; v <= hi; ++v) {
        cur.at(i, j, a) = v;
        rec_cell(ci + 1, remaining - v);
      }
      cur.at(i, j, a) = 0;
    };
    rec_cell(0, d[static_cast<std::size_t>(i - 1)]);
  };
  rec_row(1);

  std::sort(out.begin(), out.end());
  return out;
}

Rat p_value(const GTPattern& pat, int i, int j, int a, const SpecEnv& env) {
  const int n = pat.pi.n();
  if (i < 1 || i > n || j < 1 || j > i || a < 1 || a > pat.pi.p(j))
    throw std::out_of_range("p_value: index out of range");
  const Rat& x = env.x_at(pat.pi.offset(j - 1) + a);
  if (i == n) return -x;
  return env.hbar * pat.at(i, j, a) - x;
}

long quasiflag_dimension(const Composition& pi, const DegreeVector& d, bool based) {
  if (static_cast<int>(d.size()) != pi.n() - 1)
    throw std::invalid_argument("quasiflag_dimension: degree vector length must be n-1");
  long dim = 0;
  for (int i = 1; i <= pi.n() - 1; ++i)
    dim += static_cast<long>(d[static_cast<std::size_t>(i - 1)]) * (pi.p(i) + pi.p(i + 1));
  if (!based) {
    for (int i = 1; i <= pi.n(); ++i)
      for (int j = i + 1; j <= pi.n(); ++j) dim += static_cast<long>(pi.p(i)) * pi.p(j);
  }
  return dim;
}

std::string pattern_key(const GTPattern& pat) {
  std::ostringstream os;
  bool first_cell = true;
  for (int i = 1; i <= pat.pi.n() - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      if (!first_cell) os << ';';
      first_cell = false;
      os << i << ',' << j << ':';
      for (int a = 1; a <= pat.pi.p(j); ++a) {
        if (a > 1) os << ' ';
        os << pat.at(i, j, a);
      }
    }
  return os.str();
}

nlohmann::json pattern_to_json(const GTPattern& pat) {
  nlohmann::json rows = nlohmann::json::object();
  for (int i = 1; i <= pat.pi.n() - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      nlohmann::json vals = nlohmann::json::array();
      for (int a = 1; a <= pat.pi.p(j); ++a) vals.push_back(pat.at(i, j, a));
      rows[std::to_string(i) + "," + std::to_string(j)] = vals;
    }
  return nlohmann::json{{"pi", pat.pi.parts}, {"rows", rows}};
}

PatternSpace::PatternSpace(const Composition& comp, const DegreeVector& d) : pi(comp), degree(d) {
  if (nonnegative(d)) basis = enumerate_patterns(comp, d);
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
}

}  // namespace zastava
