#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace zastava {

// Weakly increasing composition pi = (p_1 <= ... <= p_n), sum N.  The
// increasing order is what makes the shifted generator ranges
// s >= p_{i+1} - p_i + 1 nonempty.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("Composition: needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("Composition: parts must be positive");
      if (i > 0 && parts[i] < parts[i - 1])
        throw std::invalid_argument("Composition: parts must be weakly increasing");
    }
  }

  int n() const { return static_cast<int>(parts.size()); }
  int N() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int p(int i) const { return parts.at(static_cast<std::size_t>(i) - 1); }  // 1-based

  // p_1 + ... + p_{i}; offset(0) = 0
  int offset(int i) const {
    int acc = 0;
    for (int k = 1; k <= i; ++k) acc += p(k);
    return acc;
  }

  // smallest superscript of e_i: p_{i+1} - p_i + 1
  int e_min(int i) const { return p(i + 1) - p(i) + 1; }

  bool operator==(const Composition& o) const { return parts == o.parts; }
};

// d = (d_1, ..., d_{n-1}), the grading lattice coordinates.
using DegreeVector = std::vector<int>;

inline int total_degree(const DegreeVector& d) {
  int acc = 0;
  for (int v : d) acc += v;
  return acc;
}

inline bool nonnegative(const DegreeVector& d) {
  for (int v : d)
    if (v < 0) return false;
  return true;
}

inline DegreeVector shifted(DegreeVector d, int i /*1-based*/, int delta) {
  d.at(static_cast<std::size_t>(i) - 1) += delta;
  return d;
}

// All degree vectors of the given length with total degree <= cap, ordered by
// (total degree, lexicographic).
std::vector<DegreeVector> degree_vectors_up_to(int length, int cap);

}  // namespace zastava
