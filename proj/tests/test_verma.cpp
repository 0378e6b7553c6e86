#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zastava/prng.hpp"
#include "zastava/verma.hpp"

using namespace zastava;

TEST_CASE("chi values") {
  const Composition pi{1, 2};
  const SpecEnv env = make_spec_env(3, 6, 42);
  CHECK(chi_value(pi, 1, 2, env) == Rat(1) / env.hbar);  // s = p_2
  CHECK_THROWS(chi_value(pi, 1, 1, env));                // below the range
  CHECK_THROWS(chi_value(pi, 1, 3, env));                // above the range

  const Composition pi2{2, 2};
  CHECK(chi_value(pi2, 1, 1, env) == 0);
  CHECK(chi_value(pi2, 1, 2, env) == Rat(1) / env.hbar);
}

TEST_CASE("whittaker components: hand value for pi=(1,1)") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 42);
  const GTPattern zero(pi);
  GTPattern one(pi);
  one.at(1, 1, 1) = 1;

  const WhittakerComponent w0 = whittaker_component(pi, {0}, env);
  CHECK(w0.vector.at(zero) == 1);

  const WhittakerComponent w1 = whittaker_component(pi, {1}, env);
  CHECK(w1.vector.at(one) == Rat(1) / (env.hbar * (env.hbar - env.x_at(1) + env.x_at(2))));
}

TEST_CASE("whittaker components solve uniquely and satisfy the unit-class dressing") {
  for (const Composition& pi : {Composition{1, 2}, Composition{2, 2}, Composition{1, 1, 1}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 17);
    GTModule mod(pi, env);
    WhittakerEngine engine(mod);
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 3)) {
      const WeightVector& w = engine.component(d);
      for (int i = 1; i <= pi.n() - 1; ++i) {
        if (d.at(static_cast<std::size_t>(i - 1)) < 1) continue;
        const WeightVector& lower = engine.component(shifted(d, i, -1));
        // zero range
        for (int s = pi.e_min(i); s < pi.p(i + 1); ++s)
          CHECK(apply_generator({'e', i, s}, w, env).is_zero());
        // hbar e^{(p_{i+1})} w_d = w_{d - delta_i}, the eigenconstant is 1
        CHECK(env.hbar * apply_generator({'e', i, pi.p(i + 1)}, w, env) == lower);
      }
    }
  }
}

TEST_CASE("whittaker dump json schema") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 42);
  const WhittakerComponent w1 = whittaker_component(pi, {1}, env);
  const auto j = whittaker_to_json(w1);
  CHECK(j["degree"] == nlohmann::json({1}));
  CHECK(j["coeffs"].contains("1,1:1"));
}

TEST_CASE("shapovalov norms: base case and hand value") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 42);
  const GTPattern zero(pi);
  GTPattern one(pi);
  one.at(1, 1, 1) = 1;

  CHECK(shapovalov_norm(pi, zero, env) == 1);
  CHECK(shapovalov_norm(pi, one, env) == -env.hbar * (env.hbar - env.x_at(1) + env.x_at(2)));
}

TEST_CASE("shapovalov path independence across routes and superscripts") {
  for (const Composition& pi : {Composition{2, 2}, Composition{1, 1, 2}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 23);
    GTModule mod(pi, env);
    ShapovalovTable table(mod);
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 3)) {
      if (total_degree(d) == 0) continue;
      for (const auto& pat : enumerate_patterns(pi, d)) {
        const Rat reference = table.norm(pat);
        for (int i = 1; i <= pi.n() - 1; ++i)
          for (int j = 1; j <= i; ++j)
            for (int a = 1; a <= pi.p(j); ++a) {
              if (pat.at(i, j, a) == 0) continue;
              GTPattern src = pat;
              src.at(i, j, a) -= 1;
              if (!is_valid_pattern(src)) continue;
              for (int s = 1; s <= 3; ++s) {
                const Rat F = f_coeff(pi, src, pat, i, s, env);
                if (F == 0) continue;
                const Rat E = e_coeff(pi, pat, src, i, s + pi.p(i + 1) - pi.p(i), env);
                CHECK(E * table.norm(src) / F == reference);
              }
            }
      }
    }
  }
}

TEST_CASE("pairing: bilinear, symmetric, adjoint") {
  const Composition pi{1, 2};
  const SpecEnv env = make_spec_env(3, 8, 29);
  GTModule mod(pi, env);
  ShapovalovTable norms(mod);
  SplitMix64 rng(77);

  const auto random_vec = [&](const DegreeVector& d) {
    WeightVector v(pi, d);
    for (const auto& pat : enumerate_patterns(pi, d))
      v.set(pat, rat(rng.range(-9, 9), rng.range(1, 4)));
    return v;
  };

  // (highest, highest) = 1
  WeightVector highest(pi, {0});
  highest.set(GTPattern(pi), Rat(1));
  CHECK(shapovalov_pairing(norms, highest, highest) == 1);

  for (int d1 = 0; d1 <= 2; ++d1) {
    const DegreeVector d{d1};
    const WeightVector v = random_vec(d), w = random_vec(d);
    CHECK(shapovalov_pairing(norms, v, w) == shapovalov_pairing(norms, w, v));

    const WeightVector up = random_vec({d1 + 1});
    for (int s = 1; s <= 2; ++s) {
      const WeightVector fv = apply_generator({'f', 1, s}, v, env);
      const WeightVector eu = apply_generator({'e', 1, s + pi.p(2) - pi.p(1)}, up, env);
      CHECK(shapovalov_pairing(norms, fv, up) == shapovalov_pairing(norms, v, eu));
    }
  }

  WeightVector w0(pi, {0}), w1(pi, {1});
  CHECK_THROWS(shapovalov_pairing(norms, w0, w1));
}

TEST_CASE("highest weight check") {
  for (const Composition& pi : {Composition{1, 1}, Composition{2, 2}, Composition{1, 1, 2}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 31);
    CHECK(highest_weight_check(pi, env, 6));
  }
  // detector: a skewed x on one side must be noticed
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 31);
  SpecEnv skewed = env;
  skewed.x[0] += 1;
  const GTPattern zero(pi);
  CHECK(!(d_series(pi, 1, zero, env, 6) == d_series(pi, 1, zero, skewed, 6)));
}

TEST_CASE("whittaker norms are block-symmetric in x") {
  const Composition pi{2, 2};
  const SpecEnv env = make_spec_env(4, 8, 37);
  GTModule mod1(pi, env);
  WhittakerEngine e1(mod1);
  ShapovalovTable n1(mod1);

  const SpecEnv permuted = swap_x(env, 3, 4);  // inside the second block
  GTModule mod2(pi, permuted);
  WhittakerEngine e2(mod2);
  ShapovalovTable n2(mod2);

  for (const auto& d : degree_vectors_up_to(1, 2)) {
    const Rat a = shapovalov_pairing(n1, e1.component(d), e1.component(d));
    const Rat b = shapovalov_pairing(n2, e2.component(d), e2.component(d));
    CHECK(a == b);
  }
}
