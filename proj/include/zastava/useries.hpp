#pragma once

#include <vector>

#include "zastava/rational.hpp"
#include "zastava/upoly.hpp"

namespace zastava {

// Truncated power series in u^{-1}: coefficient of u^{-s} at index s,
// kept exactly for s = 0..order.
struct USeries {
  std::vector<Rat> c;

  USeries() = default;
  USeries(std::vector<Rat> coeffs, int order) : c(std::move(coeffs)) {
    c.resize(static_cast<std::size_t>(order) + 1, Rat(0));
  }

  static USeries one(int order) {
    USeries s;
    s.c.assign(static_cast<std::size_t>(order) + 1, Rat(0));
    s.c[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c.size()) - 1; }

  Rat coeff(int s) const {
    if (s < 0 || s > order()) return Rat(0);
    return c[static_cast<std::size_t>(s)];
  }

  bool operator==(const USeries& o) const { return c == o.c; }
};

USeries operator+(const USeries& a, const USeries& b);
USeries operator-(const USeries& a, const USeries& b);
// product truncated at min(order_a, order_b)
USeries operator*(const USeries& a, const USeries& b);
USeries operator*(const Rat& s, const USeries& a);

// Multiplicative inverse of a series with constant term 1, to the same order.
// Throws if the constant term differs from 1.
USeries series_inverse(const USeries& s);

// The series u^{-deg P} * P(u) for a monic polynomial P (coefficients reversed;
// constant term 1).
USeries series_from_monic(const UPoly& p, int order);

// Expansion of P(u)/Q(u) * u^{deg Q - deg P} for monic P, Q: a series with
// constant term 1.
USeries series_from_monic_ratio(const UPoly& num, const UPoly& den, int order);

}  // namespace zastava
