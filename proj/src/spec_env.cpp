#include "zastava/spec_env.hpp"

#include <stdexcept>

#include "zastava/prng.hpp"

namespace zastava {

namespace {

bool is_generic(const std::vector<Rat>& x, const Rat& hbar, int cap) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      const Rat diff = x[i] - x[j];
      for (int m = -cap; m <= cap; ++m)
        if (diff == m * hbar) return false;
    }
  return true;
}

}  // namespace

SpecEnv make_spec_env(int N, int degree_cap, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("make_spec_env: N must be >= 1");
  if (degree_cap < 0) throw std::invalid_argument("make_spec_env: negative degree cap");

  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
  constexpr int kMaxAttempts = 512;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SpecEnv env;
    env.N = N;
    env.seed = seed;
    env.genericity_cap = degree_cap;

    long hnum = rng.range(1, 9);
    if (rng.next() & 1) hnum = -hnum;
    env.hbar = rat(hnum, rng.range(1, 4));

    env.x.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) env.x.push_back(rat(rng.range(-99, 99), rng.range(1, 4)));

    if (env.hbar != 0 && is_generic(env.x, env.hbar, degree_cap)) return env;
  }
  throw std::runtime_error("make_spec_env: no generic point found (pathological configuration)");
}

SpecEnv swap_x(const SpecEnv& env, int a, int b) {
  SpecEnv out = env;
  std::swap(out.x.at(static_cast<std::size_t>(a) - 1), out.x.at(static_cast<std::size_t>(b) - 1));
  return out;
}

}  // namespace zastava
