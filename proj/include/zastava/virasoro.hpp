#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "zastava/rational.hpp"

namespace zastava {

// Verma-module data for the Virasoro algebra with the commutation relation
//   [L_m, L_n] = (m - n) L_{m+n} + (c/12)(m^3 - m) delta_{m+n,0}.
struct VirParams {
  Rat delta;  // L_0 eigenvalue on the highest vector
  Rat c;      // central charge
};

// A PBW word L_{-mu_1} ... L_{-mu_k} m with mu_1 >= ... >= mu_k >= 1,
// stored as the partition (mu_1, ..., mu_k).
using VirPartition = std::vector<int>;

// Element of one L_0-eigenspace: partition -> coefficient, no explicit zeros.
struct VirState {
  std::map<VirPartition, Rat> terms;

  void add(const VirPartition& w, const Rat& v) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (v != 0) terms[w] = v;
      return;
    }
    it->second += v;
    if (it->second == 0) terms.erase(it);
  }
  Rat at(const VirPartition& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Rat(0) : it->second;
  }
};

// Partitions of d in descending-lex order ([d] first, [1,...,1] last).
std::vector<VirPartition> partitions_of(int d);

// L_n applied to a PBW state, normal-ordered by commutator reduction.
VirState apply_mode(const VirParams& params, int n, const VirState& state);

// Gram matrix of the level-d basis under the form with <m,m> = 1 and
// L_n adjoint to L_{-n}.  Singularity is data, not an error.
std::vector<std::vector<Rat>> vir_gram(const VirParams& params, int d);

struct DegenerateLevelError : std::runtime_error {
  int level;
  explicit DegenerateLevelError(int lvl)
      : std::runtime_error("degenerate Gram at level " + std::to_string(lvl)), level(lvl) {}
};

// The unique w_d with L_1 w_d = w_{d-1}, L_i w_d = 0 for i > 1, w_0 = m.
// Throws DegenerateLevelError when the defining system is singular at the
// given parameters.
VirState vir_whittaker(const VirParams& params, int d);

// <w_d, w_d> for d = 0..cap: the conjectural instanton series (only this
// representation-theoretic side is computed).
std::vector<Rat> nekrasov_series(const VirParams& params, int cap);

// delta = -a^2/(e1 e2) + (e1+e2)^2 / (4 e1 e2);  c = 1 + 6 (e1+e2)^2 / (e1 e2)
VirParams agt_params(const Rat& a, const Rat& eps1, const Rat& eps2);
// delta = ((chi+1)^2 - (k+1)^2) / (4(k+2));  c = 1 - 6 (k+1)^2 / (k+2)
VirParams ff_params(const Rat& chi, const Rat& k);
// chi = -2a/e2 - 1;  k = -e1/e2 - 2
std::pair<Rat, Rat> chic_map(const Rat& a, const Rat& eps1, const Rat& eps2);

// ff_params(chic_map(a, e1, e2)) == agt_params(a, e1, e2) at `trials` random
// rational triples drawn from the seed.
bool dictionary_check(int trials, std::uint64_t seed);

// {"delta":"...","c":"...","levels":[{"d":0,"norm":"...","norm_q_signed":"..."}...]}
// norm_q_signed carries the (-1)^d dressing of the series variable, since the
// sign placement on Q is ambiguous; both dressings are reported.
nlohmann::json virasoro_to_json(const VirParams& params, const std::vector<Rat>& norms);

}  // namespace zastava
