#pragma once

#include <cstdint>
#include <vector>

#include "zastava/rational.hpp"

namespace zastava {

// A generic rational specialization point of the coefficient field
// C(hbar, x_1, ..., x_N).  Identities of the algebra are certified by exact
// evaluation at several such points rather than by symbolic arithmetic.
struct SpecEnv {
  int N = 0;
  std::vector<Rat> x;  // values of x_1..x_N, 1-based accessor below
  Rat hbar;
  std::uint64_t seed = 0;
  int genericity_cap = 0;  // |m| bound certified for x_i - x_j != m*hbar

  const Rat& x_at(int i) const { return x.at(static_cast<std::size_t>(i) - 1); }
};

// Draws a SpecEnv with small random rationals, redrawing until
//   hbar != 0  and  x_i - x_j != m*hbar  for all i != j, |m| <= degree_cap.
// Deterministic for fixed (N, degree_cap, seed); throws after a bounded
// number of redraws.
SpecEnv make_spec_env(int N, int degree_cap, std::uint64_t seed);

// env with x_a and x_b swapped (1-based); used for Weyl-group audits.
SpecEnv swap_x(const SpecEnv& env, int a, int b);

}  // namespace zastava
