#pragma once

#include <vector>

#include "zastava/rational.hpp"

namespace zastava {

// Polynomial in the formal variable u, coefficient of u^k at index k.
// Normalized: no trailing zero coefficients (the zero polynomial is {}).
struct UPoly {
  std::vector<Rat> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

  static UPoly constant(const Rat& v) { return v == 0 ? UPoly{} : UPoly{{v}}; }
  static UPoly one() { return constant(Rat(1)); }

  bool is_zero() const { return c.empty(); }
  // degree of the zero polynomial reported as -1
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rat(0);
    return c[static_cast<std::size_t>(k)];
  }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rat& s, const UPoly& a);

Rat eval(const UPoly& p, const Rat& u);

// p(u + a)
UPoly shift_arg(const UPoly& p, const Rat& a);

// prod_r (u + r), monic of degree roots.size(); empty product is 1
UPoly poly_from_roots(const std::vector<Rat>& roots);

// Unique polynomial of degree < nodes.size() through (nodes[k], values[k]).
// Nodes must be pairwise distinct.
UPoly lagrange_interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

}  // namespace zastava
