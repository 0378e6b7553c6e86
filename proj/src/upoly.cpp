#include "zastava/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zastava {

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly{};
  std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rat& s, const UPoly& a) {
  if (s == 0) return UPoly{};
  std::vector<Rat> c = a.c;
  for (auto& v : c) v *= s;
  return UPoly(std::move(c));
}

Rat eval(const UPoly& p, const Rat& u) {
  Rat acc(0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UPoly shift_arg(const UPoly& p, const Rat& a) {
  // Horner in (u + a): p(u+a) = (...((c_n)(u+a) + c_{n-1})(u+a) + ...)
  UPoly acc;
  const UPoly lin({a, Rat(1)});
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * lin + UPoly::constant(*it);
  return acc;
}

UPoly poly_from_roots(const std::vector<Rat>& roots) {
  UPoly acc = UPoly::one();
  for (const Rat& r : roots) acc = acc * UPoly({r, Rat(1)});
  return acc;
}

UPoly lagrange_interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("lagrange_interpolate: node/value size mismatch");
  UPoly acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    UPoly basis = UPoly::one();
    Rat denom(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      const Rat diff = nodes[i] - nodes[j];
      if (diff == 0) throw std::domain_error("lagrange_interpolate: coincident nodes");
      basis = basis * UPoly({-nodes[j], Rat(1)});
      denom *= diff;
    }
    acc = acc + (values[i] / denom) * basis;
  }
  return acc;
}

}  // namespace zastava
