#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "zastava/verma.hpp"
#include "zastava/yangian.hpp"

namespace zastava {

// How the per-degree sign of the pairing is computed.  For these degree
// lattices <theta, rho-check> equals the total degree, so both rules give the
// same sign; the rule is still exposed as configuration.
enum class SignRule { total_degree, rho_pairing };

int sign_exponent(const Composition& pi, const DegreeVector& d, SignRule rule);

// Z-coefficient at degree d: (-1)^{sign} <w_d, w_d> with the diagonal
// Shapovalov pairing of the Whittaker component with itself.
Rat z_coefficient(const Composition& pi, const DegreeVector& d, const SpecEnv& env,
                  SignRule rule = SignRule::total_degree);

struct ZSeries {
  Composition pi;
  int cap = 0;
  SpecEnv env;
  std::map<DegreeVector, Rat> terms;  // every degree vector with total <= cap
};

ZSeries z_series(const Composition& pi, int cap, const SpecEnv& env,
                 SignRule rule = SignRule::total_degree);

// Reuses one module's caches; the engine the CLI drives.
class PartitionEngine {
 public:
  explicit PartitionEngine(GTModule& mod) : mod_(mod), whittaker_(mod), norms_(mod) {}

  Rat z_coefficient(const DegreeVector& d, SignRule rule = SignRule::total_degree);
  const WeightVector& whittaker(const DegreeVector& d) { return whittaker_.component(d); }

 private:
  GTModule& mod_;
  WhittakerEngine whittaker_;
  ShapovalovTable norms_;
};

// {"pi":[...],"env":{"x":[...],"hbar":"...","seed":...},"terms":[{"d":[...],"value":"..."}]}
nlohmann::json zseries_to_json(const ZSeries& z);
// degree,value rows with dash-joined degree vectors
std::string zseries_to_csv(const ZSeries& z);

// Independent rank-1 oracle for pi = (1,1): the Whittaker-norm recursion of a
// plain sl2 Verma module with highest weight lam = -(x_b - x_a)/hbar - 1 and
// character value hbar^{-1}:
//   N_k = k (lam - k + 1) N_{k-1},   c_k k (lam - k + 1) = hbar^{-1} c_{k-1},
//   oracle(m) = (-1)^m c_m^2 N_m.
// The orientation chooses which of x_2 - x_1, x_1 - x_2 plays 2a.
enum class SL2Orientation { x2_minus_x1, x1_minus_x2 };

Rat sl2_oracle(int m, const SpecEnv& env, SL2Orientation orientation = SL2Orientation::x2_minus_x1);

// True iff every coefficient with total degree <= cap is unchanged under
// every adjacent transposition of the x-values inside one block of pi.
bool wl_invariance_check(const Composition& pi, int cap, std::uint64_t seed);

}  // namespace zastava
