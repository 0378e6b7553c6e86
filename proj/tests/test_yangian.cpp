#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zastava/prng.hpp"
#include "zastava/relations.hpp"
#include "zastava/yangian.hpp"

using namespace zastava;

namespace {

// Reference implementation of the Gelfand-Tsetlin-side matrix coefficients,
// with their own hbar dressing; used to validate the basis-change factor.
Rat e_coeff_fmo_ref(const Composition& pi, const GTPattern& src, const GTPattern& tgt, int i,
                    int s, const SpecEnv& env) {
  // locate the decrement cell
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) {
      GTPattern probe = src;
      if (probe.at(i, j, a) == 0) continue;
      probe.at(i, j, a) -= 1;
      if (!(probe == tgt)) continue;
      const Rat p = p_value(src, i, j, a, env);
      Rat val = -pow_int(env.hbar, -1 - pi.p(i)) *
                pow_int(p - i * env.hbar, s - 1 - pi.p(i + 1) + pi.p(i));
      for (int k = 1; k <= i; ++k)
        for (int b = 1; b <= pi.p(k); ++b) {
          if (k == j && b == a) continue;
          val /= p - p_value(src, i, k, b, env);
        }
      for (int k = 1; k <= i + 1; ++k)
        for (int b = 1; b <= pi.p(k); ++b) val *= p - p_value(src, i + 1, k, b, env);
      return val;
    }
  return Rat(0);
}

Rat f_coeff_fmo_ref(const Composition& pi, const GTPattern& src, const GTPattern& tgt, int i,
                    int s, const SpecEnv& env) {
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) {
      GTPattern probe = src;
      probe.at(i, j, a) += 1;
      if (!(probe == tgt)) continue;
      const Rat p = p_value(src, i, j, a, env);
      Rat val = pow_int(env.hbar, -1 + pi.p(i)) * pow_int(p + (1 - i) * env.hbar, s - 1);
      for (int k = 1; k <= i; ++k)
        for (int b = 1; b <= pi.p(k); ++b) {
          if (k == j && b == a) continue;
          val /= p - p_value(src, i, k, b, env);
        }
      for (int k = 1; k <= i - 1; ++k)
        for (int b = 1; b <= pi.p(k); ++b) val *= p - p_value(src, i - 1, k, b, env);
      return val;
    }
  return Rat(0);
}

}  // namespace

TEST_CASE("e and f matrix coefficients: hand values for pi=(1,1)") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 6, 42);
  GTPattern zero(pi), one(pi);
  one.at(1, 1, 1) = 1;

  CHECK(e_coeff(pi, one, zero, 1, 1, env) == env.hbar - env.x_at(1) + env.x_at(2));
  CHECK(f_coeff(pi, zero, one, 1, 1, env) == -Rat(1) / env.hbar);
  CHECK(f_coeff(pi, zero, one, 1, 2, env) == env.x_at(1) / env.hbar);

  // mismatched shifts vanish
  CHECK(e_coeff(pi, zero, one, 1, 1, env) == 0);
  CHECK(f_coeff(pi, one, zero, 1, 1, env) == 0);
  CHECK(e_coeff(pi, zero, zero, 1, 1, env) == 0);

  CHECK_THROWS(e_coeff(Composition{1, 2}, one, zero, 1, 1, env));  // s below p2-p1+1
  CHECK_THROWS(f_coeff(pi, zero, one, 1, 0, env));
}

TEST_CASE("apply_generator basics") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 6, 7);
  GTPattern zero(pi), one(pi);
  one.at(1, 1, 1) = 1;

  WeightVector highest(pi, {0});
  highest.set(zero, Rat(1));

  const WeightVector fv = apply_generator({'f', 1, 1}, highest, env);
  CHECK(fv.degree == DegreeVector{1});
  CHECK(fv.at(one) == -Rat(1) / env.hbar);

  const WeightVector ev = apply_generator({'e', 1, 1}, highest, env);
  CHECK(ev.is_zero());
  CHECK(ev.degree == DegreeVector{-1});

  // d-type generators act diagonally
  WeightVector v(pi, {1});
  v.set(one, rat(3, 2));
  const WeightVector dv = apply_generator({'d', 1, 1}, v, env);
  CHECK(dv.at(one) == rat(3, 2) * d_generator_value(pi, 1, 1, one, env));
}

TEST_CASE("A eigenvalues: shape and the zero-pattern value") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 6, 42);
  const GTPattern zero(pi);

  CHECK(A_eigenvalue(pi, 0, zero, env) == UPoly::one());
  CHECK(A_eigenvalue(pi, 1, zero, env) == UPoly({env.x_at(1) / env.hbar, Rat(1)}));

  const Composition pi2{1, 2};
  const SpecEnv env2 = make_spec_env(3, 8, 5);
  for (const auto& d : degree_vectors_up_to(1, 3))
    for (const auto& pat : enumerate_patterns(pi2, d))
      for (int i = 0; i <= 2; ++i) {
        const UPoly A = A_eigenvalue(pi2, i, pat, env2);
        CHECK(A.is_monic());
        CHECK(A.degree() == pi2.offset(i));
      }
}

TEST_CASE("d series: constant term, truncation, distinct eigenvalue tuples") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 11);
  for (const auto& d : degree_vectors_up_to(1, 4))
    for (const auto& pat : enumerate_patterns(pi, d)) {
      const USeries s1 = d_series(pi, 1, pat, env, 8);
      CHECK(s1.coeff(0) == 1);
      for (int r = 2; r <= 8; ++r) CHECK(s1.coeff(r) == 0);  // d_1 truncates above p_1
      CHECK(d_series(pi, 2, pat, env, 8).coeff(0) == 1);
    }

  // separation: distinct same-degree patterns have distinct A-eigenvalue tuples
  const Composition pi2{2, 2};
  const SpecEnv env2 = make_spec_env(4, 8, 3);
  for (const auto& d : degree_vectors_up_to(1, 4)) {
    const auto pats = enumerate_patterns(pi2, d);
    for (std::size_t s = 0; s < pats.size(); ++s)
      for (std::size_t t = s + 1; t < pats.size(); ++t) {
        bool distinct = false;
        for (int i = 1; i <= 2 && !distinct; ++i)
          distinct = !(A_eigenvalue(pi2, i, pats[s], env2) == A_eigenvalue(pi2, i, pats[t], env2));
        CHECK(distinct);
      }
  }
}

TEST_CASE("B and C series: orientation, degrees, hand values for pi=(1,1)") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 8, 19);
  const GTPattern zero(pi);
  GTPattern one(pi), two(pi);
  one.at(1, 1, 1) = 1;
  two.at(1, 1, 1) = 2;

  // B is e-built: it kills the highest vector and lowers the degree
  CHECK(B_series(pi, 1, zero, env).empty());
  // C is f-built: constant -hbar^{-1} toward the next degree
  const auto c0 = C_series(pi, 1, zero, env);
  REQUIRE(c0.size() == 1);
  CHECK(c0.at(one) == UPoly::constant(-Rat(1) / env.hbar));

  // B_1 on xi_d: the constant d(hbar d - x_1 + x_2) toward xi_{d-1}
  const auto b2 = B_series(pi, 1, two, env);
  REQUIRE(b2.size() == 1);
  CHECK(b2.at(one) == UPoly::constant(Rat(2) * (2 * env.hbar - env.x_at(1) + env.x_at(2))));

  // degree bound p_1 + ... + p_i - 1 on a fatter composition
  const Composition pi2{2, 2};
  const SpecEnv env2 = make_spec_env(4, 8, 23);
  for (const auto& pat : enumerate_patterns(pi2, {2}))
    for (const auto& [tgt, poly] : B_series(pi2, 1, pat, env2)) {
      (void)tgt;
      CHECK(poly.degree() <= 1);
    }
}

TEST_CASE("B/C point values are the lambda products in the GT normalization") {
  // at u = p_{ij}^{(a)}/hbar the fmo-dressed B sends xi to
  // -lambda_{i+1,1}(v) lambda_{i+1,2}(v-1) ... lambda_{i+1,i+1}(v-i) times the
  // decremented vector, and C to +lambda_{i-1,1}(v) ... lambda_{i-1,i-1}(v-i+2)
  // times the incremented one
  for (const Composition& pi : {Composition{1, 2}, Composition{1, 1, 2}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 53);
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 2))
      for (const auto& src : enumerate_patterns(pi, d))
        for (int i = 1; i <= pi.n() - 1; ++i) {
          const auto B = B_series(pi, i, src, env);
          const auto C = C_series(pi, i, src, env);
          for (int j = 1; j <= i; ++j)
            for (int a = 1; a <= pi.p(j); ++a) {
              const Rat v = p_value(src, i, j, a, env) / env.hbar;
              if (src.at(i, j, a) >= 1) {
                GTPattern down = src;
                down.at(i, j, a) -= 1;
                if (is_valid_pattern(down)) {
                  Rat lam(1);
                  for (int k = 1; k <= i + 1; ++k)
                    lam *= eval(lambda_poly(src, i + 1, k, env), v - (k - 1));
                  CHECK(-pow_int(env.hbar, -pi.p(i)) * eval(B.at(down), v) == -lam);
                }
              }
              GTPattern up = src;
              up.at(i, j, a) += 1;
              if (is_valid_pattern(up)) {
                Rat lam(1);
                for (int k = 1; k <= i - 1; ++k)
                  lam *= eval(lambda_poly(src, i - 1, k, env), v - (k - 1));
                CHECK(-pow_int(env.hbar, pi.p(i)) * eval(C.at(up), v) == lam);
              }
            }
        }
  }
}

TEST_CASE("interpolated B/C equals the series-built B/C") {
  for (const Composition& pi : {Composition{1, 1}, Composition{1, 2}, Composition{2, 2}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 29);
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 2))
      for (const auto& pat : enumerate_patterns(pi, d))
        for (int i = 1; i <= pi.n() - 1; ++i) {
          const BCPolys interp = interpolate_BC(pi, i, pat, env);
          CHECK(B_series(pi, i, pat, env) == interp.B);
          CHECK(C_series(pi, i, pat, env) == interp.C);
        }
  }
}

TEST_CASE("basis change matches the reference GT-side coefficients") {
  for (const Composition& pi : {Composition{1, 2}, Composition{2, 2}, Composition{1, 1, 2}}) {
    const SpecEnv env = make_spec_env(pi.N(), 8, 31);
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 2))
      for (const auto& src : enumerate_patterns(pi, d))
        for (int i = 1; i <= pi.n() - 1; ++i)
          for (int j = 1; j <= i; ++j)
            for (int a = 1; a <= pi.p(j); ++a) {
              GTPattern down = src, up = src;
              if (src.at(i, j, a) >= 1) {
                down.at(i, j, a) -= 1;
                if (is_valid_pattern(down)) {
                  const int s = pi.e_min(i) + 1;
                  CHECK(e_coeff_fmo_ref(pi, src, down, i, s, env) ==
                        -pow_int(env.hbar, -pi.p(i)) * e_coeff(pi, src, down, i, s, env));
                }
              }
              up.at(i, j, a) += 1;
              if (is_valid_pattern(up)) {
                CHECK(f_coeff_fmo_ref(pi, src, up, i, 2, env) ==
                      -pow_int(env.hbar, pi.p(i)) * f_coeff(pi, src, up, i, 2, env));
              }
            }
  }
}

TEST_CASE("coincident interpolation nodes are rejected as non-generic") {
  // x_1 - x_2 = hbar makes the two row-1 nodes of the pattern (1,0) collide
  SpecEnv env;
  env.N = 4;
  env.x = {Rat(7), Rat(5), Rat(1), Rat(-1)};
  env.hbar = 2;
  env.seed = 0;
  env.genericity_cap = 0;
  const Composition pi{2, 2};
  GTPattern pat(pi);
  pat.at(1, 1, 1) = 1;
  CHECK(p_value(pat, 1, 1, 1, env) == p_value(pat, 1, 1, 2, env));
  CHECK_THROWS_AS(interpolate_BC(pi, 1, pat, env), std::domain_error);
  // the matrix coefficients hit the same zero denominator
  GTPattern tgt = pat;
  tgt.at(1, 1, 1) = 0;
  CHECK_THROWS_AS(e_coeff(pi, pat, tgt, 1, 1, env), std::domain_error);
}

TEST_CASE("to_fmo dressing and roundtrip") {
  const Composition pi{1, 1};
  const SpecEnv env = make_spec_env(2, 6, 37);
  GTPattern one(pi);
  one.at(1, 1, 1) = 1;

  WeightVector highest(pi, {0});
  highest.set(GTPattern(pi), Rat(1));
  CHECK(to_fmo(highest, Normalization::fmo, env) == highest);

  WeightVector v(pi, {1});
  v.set(one, Rat(1));
  const WeightVector dressed = to_fmo(v, Normalization::fmo, env);
  CHECK(dressed.at(one) == -env.hbar);
  CHECK(to_fmo(dressed, Normalization::geometric, env) == v);
}

TEST_CASE("relation families on small cases") {
  const SpecEnv env11 = make_spec_env(2, 8, 42);
  const Composition pi11{1, 1};
  CHECK(verify_relation(RelId::b, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::a, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::e, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::f, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::c, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::d, pi11, 2, env11, 1).ok);
  CHECK(verify_relation(RelId::truncation, pi11, 2, env11, 1).ok);

  const SpecEnv env12 = make_spec_env(3, 8, 43);
  const Composition pi12{1, 2};
  CHECK(verify_relation(RelId::b, pi12, 2, env12, 1).ok);
  CHECK(verify_relation(RelId::c, pi12, 2, env12, 1).ok);
  CHECK(verify_relation(RelId::d, pi12, 2, env12, 1).ok);
  CHECK(verify_relation(RelId::truncation, pi12, 2, env12, 1).ok);

  const SpecEnv env111 = make_spec_env(3, 8, 44);
  const Composition pi111{1, 1, 1};
  CHECK(verify_relation(RelId::g, pi111, 2, env111, 1).ok);
  CHECK(verify_relation(RelId::h, pi111, 2, env111, 1).ok);
  CHECK(verify_relation(RelId::k, pi111, 2, env111, 1).ok);
  CHECK(verify_relation(RelId::l, pi111, 2, env111, 1).ok);
}

TEST_CASE("long-range and Serre families are nonvacuous at n = 4") {
  const Composition pi{1, 1, 1, 1};
  const SpecEnv env = make_spec_env(4, 6, 2026);
  const RelationResult ri = verify_relation(RelId::i, pi, 1, env, 1);
  CHECK(ri.ok);
  CHECK(ri.instances > 0);
  const RelationResult rj = verify_relation(RelId::j, pi, 1, env, 1);
  CHECK(rj.ok);
  CHECK(rj.instances > 0);
  CHECK(verify_relation(RelId::k, pi, 1, env, 1).ok);
  CHECK(verify_relation(RelId::l, pi, 1, env, 1).ok);
}

TEST_CASE("wide shift gap: pi=(1,3)") {
  const Composition pi{1, 3};
  const SpecEnv env = make_spec_env(4, 6, 47);
  CHECK(pi.e_min(1) == 3);
  CHECK(verify_relation(RelId::b, pi, 2, env, 1).ok);
  CHECK(verify_relation(RelId::c, pi, 2, env, 1).ok);
  CHECK(verify_relation(RelId::e, pi, 2, env, 1).ok);
  CHECK(verify_relation(RelId::truncation, pi, 2, env, 1).ok);
}

TEST_CASE("relations hold in the fmo normalization too") {
  const SpecEnv env = make_spec_env(3, 8, 45);
  VerifyOptions opts;
  opts.norm = Normalization::fmo;
  CHECK(verify_relation(RelId::b, Composition{1, 2}, 2, env, 1, opts).ok);
  CHECK(verify_relation(RelId::e, Composition{1, 2}, 2, env, 1, opts).ok);
}

TEST_CASE("mutated relation check fails with a witness") {
  const SpecEnv env = make_spec_env(2, 8, 46);
  VerifyOptions opts;
  opts.mutate = true;
  const RelationResult r = verify_relation(RelId::b, Composition{1, 1}, 2, env, 1, opts);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.contains("relation"));
  CHECK(r.witness.contains("degree"));
  CHECK(r.witness.contains("instance"));
  CHECK(r.witness["relation"] == "b");
}
