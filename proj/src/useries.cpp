#include "zastava/useries.hpp"

#include <algorithm>
#include <stdexcept>

namespace zastava {

namespace {
int common_order(const USeries& a, const USeries& b) { return std::min(a.order(), b.order()); }
}  // namespace

USeries operator+(const USeries& a, const USeries& b) {
  const int ord = common_order(a, b);
  std::vector<Rat> c(static_cast<std::size_t>(ord) + 1);
  for (int s = 0; s <= ord; ++s) c[static_cast<std::size_t>(s)] = a.coeff(s) + b.coeff(s);
  return USeries(std::move(c), ord);
}

USeries operator-(const USeries& a, const USeries& b) {
  const int ord = common_order(a, b);
  std::vector<Rat> c(static_cast<std::size_t>(ord) + 1);
  for (int s = 0; s <= ord; ++s) c[static_cast<std::size_t>(s)] = a.coeff(s) - b.coeff(s);
  return USeries(std::move(c), ord);
}

USeries operator*(const USeries& a, const USeries& b) {
  const int ord = common_order(a, b);
  std::vector<Rat> c(static_cast<std::size_t>(ord) + 1, Rat(0));
  for (int i = 0; i <= ord; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= ord; ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return USeries(std::move(c), ord);
}

USeries operator*(const Rat& s, const USeries& a) {
  std::vector<Rat> c = a.c;
  for (auto& v : c) v *= s;
  return USeries(std::move(c), a.order());
}

USeries series_inverse(const USeries& s) {
  if (s.order() < 0 || s.coeff(0) != 1)
    throw std::domain_error("series_inverse: constant term must be 1");
  const int ord = s.order();
  std::vector<Rat> inv(static_cast<std::size_t>(ord) + 1, Rat(0));
  inv[0] = 1;
  // sum_{t=0}^{r} s_t * inv_{r-t} = 0 for r >= 1
  for (int r = 1; r <= ord; ++r) {
    Rat acc(0);
    for (int t = 1; t <= r; ++t) acc += s.coeff(t) * inv[static_cast<std::size_t>(r - t)];
    inv[static_cast<std::size_t>(r)] = -acc;
  }
  return USeries(std::move(inv), ord);
}

USeries series_from_monic(const UPoly& p, int order) {
  if (!p.is_monic()) throw std::invalid_argument("series_from_monic: polynomial not monic");
  const int deg = p.degree();
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int s = 0; s <= order && s <= deg; ++s) c[static_cast<std::size_t>(s)] = p.coeff(deg - s);
  return USeries(std::move(c), order);
}

USeries series_from_monic_ratio(const UPoly& num, const UPoly& den, int order) {
  return series_from_monic(num, order) * series_inverse(series_from_monic(den, order));
}

}  // namespace zastava
