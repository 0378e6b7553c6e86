#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zastava/partition.hpp"

using namespace zastava;

TEST_CASE("z coefficient: degree zero is 1, hand value at degree one") {
  const SpecEnv env = make_spec_env(2, 8, 42);
  const Composition pi{1, 1};
  CHECK(z_coefficient(pi, {0}, env) == 1);
  CHECK(z_coefficient(pi, {1}, env) ==
        Rat(1) / (env.hbar * (env.hbar - env.x_at(1) + env.x_at(2))));

  const Composition pi2{1, 2};
  const SpecEnv env2 = make_spec_env(3, 8, 42);
  CHECK(z_coefficient(pi2, {0}, env2) == 1);
}

TEST_CASE("sl2 oracle closed forms") {
  const SpecEnv env = make_spec_env(2, 10, 5);
  const Rat diff = env.x_at(2) - env.x_at(1);
  CHECK(sl2_oracle(0, env) == 1);
  CHECK(sl2_oracle(1, env) == Rat(1) / (env.hbar * (env.hbar + diff)));
  CHECK(sl2_oracle(2, env) ==
        Rat(1) / (2 * env.hbar * env.hbar * (env.hbar + diff) * (2 * env.hbar + diff)));
  // the reversed orientation swaps x_1 and x_2
  CHECK(sl2_oracle(1, env, SL2Orientation::x1_minus_x2) ==
        Rat(1) / (env.hbar * (env.hbar - diff)));
}

TEST_CASE("z matches the independent sl2 oracle up to degree 5") {
  const SpecEnv env = make_spec_env(2, 10, 11);
  const Composition pi{1, 1};
  GTModule mod(pi, env);
  PartitionEngine engine(mod);
  for (int m = 0; m <= 5; ++m)
    CHECK(engine.z_coefficient(DegreeVector{m}) == sl2_oracle(m, env));
}

TEST_CASE("trivial parabolic: Z is identically 1") {
  const Composition pi{4};
  const SpecEnv env = make_spec_env(4, 8, 13);
  const ZSeries z = z_series(pi, 3, env);
  REQUIRE(z.terms.size() == 1);
  CHECK(z.terms.at(DegreeVector{}) == 1);
}

TEST_CASE("z series term counts and degree-zero normalization") {
  const Composition pi{1, 1, 1};
  const SpecEnv env = make_spec_env(3, 8, 19);
  const ZSeries z = z_series(pi, 2, env);
  CHECK(z.terms.size() == 6);  // (0,0),(1,0),(0,1),(2,0),(1,1),(0,2)
  CHECK(z.terms.at(DegreeVector{0, 0}) == 1);

  const Composition pi2{1, 1};
  const ZSeries z2 = z_series(pi2, 3, make_spec_env(2, 8, 7));
  CHECK(z2.terms.size() == 4);
}

TEST_CASE("both sign rules agree on these lattices") {
  const Composition pi{1, 2};
  const SpecEnv env = make_spec_env(3, 8, 23);
  for (const auto& d : degree_vectors_up_to(1, 3))
    CHECK(z_coefficient(pi, d, env, SignRule::total_degree) ==
          z_coefficient(pi, d, env, SignRule::rho_pairing));
}

TEST_CASE("W_L invariance") {
  CHECK(wl_invariance_check(Composition{2, 2}, 2, 42));
  CHECK(wl_invariance_check(Composition{1, 1}, 3, 42));  // vacuous: singleton blocks
}

TEST_CASE("z series json and csv schemas") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 7);
  const ZSeries z = z_series(pi, 1, env);
  const auto j = zseries_to_json(z);
  CHECK(j["pi"] == nlohmann::json({1, 1}));
  CHECK(j["env"]["seed"] == 7);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["d"] == nlohmann::json({0}));
  CHECK(j["terms"][0]["value"] == "1");

  const std::string csv = zseries_to_csv(z);
  CHECK(csv.rfind("degree,value\n0,1\n1,", 0) == 0);
}

TEST_CASE("pole structure smoke audit at an integer specialization") {
  // with integer x and hbar every denominator must divide a power of the
  // product of the expected linear factors m*hbar and x_i - x_j + m*hbar
  SpecEnv env;
  env.N = 2;
  env.x = {Rat(3), Rat(-4)};  // odd difference: never a multiple of hbar = 2
  env.hbar = 2;
  env.seed = 0;
  env.genericity_cap = 8;
  const Composition pi{1, 1};
  const int cap = 3;

  mpz_class catalog(1);
  for (int m = 1; m <= cap + 1; ++m) catalog *= mpz_class(2 * m);
  for (int m = -cap - 1; m <= cap + 1; ++m) {
    const Rat f1 = env.x_at(1) - env.x_at(2) + m * env.hbar;
    const Rat f2 = env.x_at(2) - env.x_at(1) + m * env.hbar;
    catalog *= f1.get_num() * f2.get_num();
  }
  mpz_class power(1);
  for (int k = 0; k < 4 * cap; ++k) power *= catalog;

  const ZSeries z = z_series(pi, cap, env);
  for (const auto& [d, value] : z.terms) {
    (void)d;
    CHECK(mpz_divisible_p(power.get_mpz_t(), value.get_den().get_mpz_t()));
  }
}
