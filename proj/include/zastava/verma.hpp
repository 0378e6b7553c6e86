#pragma once

#include <map>

#include "json.hpp"
#include "zastava/yangian.hpp"

namespace zastava {

// chi(e_i^{(s)}): 0 for p_{i+1}-p_i+1 <= s < p_{i+1} and hbar^{-1} at
// s = p_{i+1}.  Out-of-range superscripts are rejected.
Rat chi_value(const Composition& pi, int i, int s, const SpecEnv& env);

struct WhittakerComponent {
  DegreeVector degree;
  WeightVector vector;  // geometric normalization
};

// Degree-by-degree solver for the components w_d of the Whittaker vector:
//   e_i^{(s)} w_d = chi(e_i^{(s)}) w_{d - delta_i},  s in [p_{i+1}-p_i+1, p_{i+1}].
// Each degree is a full-column-rank exact linear system; rank deficiency or
// inconsistency throws (non-generic specialization or convention bug).
class WhittakerEngine {
 public:
  explicit WhittakerEngine(GTModule& mod) : mod_(mod) {}

  const WeightVector& component(const DegreeVector& d);

 private:
  GTModule& mod_;
  std::map<DegreeVector, WeightVector> memo_;
};

WhittakerComponent whittaker_component(const Composition& pi, const DegreeVector& d,
                                       const SpecEnv& env);

// {"degree":[...],"coeffs":{"<pattern-key>":"num/den"}}
nlohmann::json whittaker_to_json(const WhittakerComponent& w);

// Diagonal Shapovalov norms N(pattern), N(zero pattern) = 1, via
//   N(d + delta) * F^{(1)}_{d -> d+delta} = E^{(1+p_{i+1}-p_i)}_{d+delta -> d} * N(d)
// along the first increment position with a nonzero f-coefficient.  The ratio
// is independent of the superscript choice; path independence across
// increment positions is a separately tested property.
class ShapovalovTable {
 public:
  explicit ShapovalovTable(GTModule& mod) : mod_(mod) {}

  const Rat& norm(const GTPattern& pat);

 private:
  GTModule& mod_;
  std::map<GTPattern, Rat> memo_;
};

Rat shapovalov_norm(const Composition& pi, const GTPattern& pat, const SpecEnv& env);

// sum_pat v[pat] w[pat] N(pat); bilinear, symmetric; degree mismatch throws.
Rat shapovalov_pairing(const Composition& pi, const WeightVector& v, const WeightVector& w,
                       const SpecEnv& env);
Rat shapovalov_pairing(ShapovalovTable& norms, const WeightVector& v, const WeightVector& w);

// Compares the d_k(u) eigenvalue series on the highest vector against the
// elementary-symmetric prediction u^{-p_k} prod_a (u + k - 1 + hbar^{-1} x),
// x running over block k, to the given order.
bool highest_weight_check(const Composition& pi, const SpecEnv& env, int order);

}  // namespace zastava
