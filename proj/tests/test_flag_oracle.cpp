// Independent rank-2 oracle for the full flag case pi = (1,1,1): a classical
// sl3 Verma-module computation in PBW coordinates f1^a f3^c f2^b with
// f3 = [f2, f1], sharing nothing with the fixed-point machinery.  Whittaker
// components solve e_i w = hbar^{-1} w_{d - delta_i} with highest weight
// lam_i = -(x_{i+1} - x_i)/hbar - 1; the contravariant form is peeled through
// the adjunction <f_i u, v> = <u, e_i v>.  The signed norms must reproduce
// the partition-series coefficients exactly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>

#include "zastava/linsolve.hpp"
#include "zastava/partition.hpp"

using namespace zastava;

namespace {

using Mono = std::array<int, 3>;  // exponents (a, c, b)
using State = std::map<Mono, Rat>;

struct SL3Verma {
  Rat lam1, lam2;

  // e1 (a,c,b) = a (lam1 - a + 1 - c + b) (a-1,c,b) - c (a,c-1,b+1)
  State e1(const State& s) const {
    State out;
    for (const auto& [m, v] : s) {
      const auto [a, c, b] = m;
      if (a >= 1) add(out, {a - 1, c, b}, Rat(a) * (lam1 - (a - 1) - c + b) * v);
      if (c >= 1) add(out, {a, c - 1, b + 1}, Rat(-c) * v);
    }
    return out;
  }
  // e2 (a,c,b) = b (lam2 - b + 1) (a,c,b-1) + c (a+1,c-1,b)
  State e2(const State& s) const {
    State out;
    for (const auto& [m, v] : s) {
      const auto [a, c, b] = m;
      if (b >= 1) add(out, {a, c, b - 1}, Rat(b) * (lam2 - (b - 1)) * v);
      if (c >= 1) add(out, {a + 1, c - 1, b}, Rat(c) * v);
    }
    return out;
  }

  Rat gram(const Mono& mu, const State& nu) const {
    const auto [a, c, b] = mu;
    if (a == 0 && c == 0 && b == 0) {
      auto it = nu.find({0, 0, 0});
      return it == nu.end() ? Rat(0) : it->second;
    }
    if (a >= 1) return gram({a - 1, c, b}, e1(nu));
    // f3-led: f3 = f2 f1 - f1 f2
    if (c >= 1) return gram({1, c - 1, b}, e2(nu)) - gram({0, c - 1, b + 1}, e1(nu));
    return gram({0, 0, b - 1}, e2(nu));
  }

  static std::vector<Mono> basis(int d1, int d2) {
    std::vector<Mono> out;
    for (int c = 0; c <= std::min(d1, d2); ++c) out.push_back({d1 - c, c, d2 - c});
    return out;
  }

 private:
  static void add(State& s, const Mono& m, const Rat& v) {
    if (v == 0) return;
    auto& cell = s[m];
    cell += v;
    if (cell == 0) s.erase(m);
  }
};

}  // namespace

TEST_CASE("pi=(1,1,1) partition coefficients match the sl3 Verma oracle") {
  const SpecEnv env = make_spec_env(3, 10, 42);
  const Composition pi{1, 1, 1};
  GTModule mod(pi, env);
  PartitionEngine engine(mod);

  SL3Verma oracle;
  oracle.lam1 = -(env.x_at(2) - env.x_at(1)) / env.hbar - 1;
  oracle.lam2 = -(env.x_at(3) - env.x_at(2)) / env.hbar - 1;
  const Rat chi = Rat(1) / env.hbar;

  const int cap = 3;
  std::map<std::pair<int, int>, State> w;
  w[{0, 0}] = State{{{0, 0, 0}, Rat(1)}};

  for (int tot = 1; tot <= cap; ++tot)
    for (int d1 = 0; d1 <= tot; ++d1) {
      const int d2 = tot - d1;
      const auto basis = SL3Verma::basis(d1, d2);

      std::vector<std::vector<Rat>> rows;
      std::vector<Rat> rhs;
      for (int which = 1; which <= 2; ++which) {
        const int t1 = d1 - (which == 1), t2 = d2 - (which == 2);
        if (t1 < 0 || t2 < 0) continue;
        const State& lower = w.at({t1, t2});
        std::vector<State> images;
        images.reserve(basis.size());
        for (const auto& m : basis)
          images.push_back(which == 1 ? oracle.e1(State{{m, Rat(1)}})
                                      : oracle.e2(State{{m, Rat(1)}}));
        for (const auto& tm : SL3Verma::basis(t1, t2)) {
          std::vector<Rat> row;
          row.reserve(basis.size());
          for (const auto& img : images) {
            auto it = img.find(tm);
            row.push_back(it == img.end() ? Rat(0) : it->second);
          }
          rows.push_back(std::move(row));
          auto lt = lower.find(tm);
          rhs.push_back(chi * (lt == lower.end() ? Rat(0) : lt->second));
        }
      }
      const SolveResult sol = solve_exact(std::move(rows), std::move(rhs));
      REQUIRE(sol.status == SolveStatus::unique);
      State st;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (sol.solution[k] != 0) st[basis[k]] = sol.solution[k];
      w[{d1, d2}] = std::move(st);
    }

  for (int tot = 0; tot <= cap; ++tot)
    for (int d1 = 0; d1 <= tot; ++d1) {
      const int d2 = tot - d1;
      const State& st = w.at({d1, d2});
      Rat norm(0);
      for (const auto& [mu, cu] : st)
        for (const auto& [nv, cv] : st) norm += cu * cv * oracle.gram(mu, State{{nv, Rat(1)}});
      const Rat signed_norm = tot % 2 == 0 ? norm : Rat(-norm);
      CHECK(engine.z_coefficient(DegreeVector{d1, d2}) == signed_norm);
    }
}
