#include "zastava/verma.hpp"

#include <stdexcept>

#include "zastava/linsolve.hpp"

namespace zastava {

Rat chi_value(const Composition& pi, int i, int s, const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("chi_value: index out of range");
  if (s < pi.e_min(i) || s > pi.p(i + 1))
    throw std::invalid_argument("chi_value: superscript outside the character range");
  if (s == pi.p(i + 1)) return Rat(1) / env.hbar;
  return Rat(0);
}

const WeightVector& WhittakerEngine::component(const DegreeVector& d) {
  auto it = memo_.find(d);
  if (it != memo_.end()) return it->second;

  const Composition& pi = mod_.pi();
  const PatternSpace& S = mod_.space(d);
  WeightVector w(pi, d);

  if (total_degree(d) == 0) {
    if (S.dim() != 1) throw std::logic_error("WhittakerEngine: empty degree-0 space");
    w.set(S.basis[0], Rat(1));
    return memo_.emplace(d, std::move(w)).first->second;
  }

  // stacked system over all (i, s) conditions
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int i = 1; i <= pi.n() - 1; ++i) {
    if (d.at(static_cast<std::size_t>(i - 1)) < 1) continue;
    const DegreeVector lower = shifted(d, i, -1);
    const WeightVector& wl = component(lower);
    const PatternSpace& T = mod_.space(lower);
    for (int s = pi.e_min(i); s <= pi.p(i + 1); ++s) {
      const SparseOp& E = mod_.generator('e', i, s, d);
      const Rat chi = chi_value(pi, i, s, mod_.env());
      std::vector<std::vector<Rat>> block(static_cast<std::size_t>(T.dim()),
                                          std::vector<Rat>(static_cast<std::size_t>(S.dim()), Rat(0)));
      for (int k = 0; k < S.dim(); ++k)
        for (const auto& [t, val] : E.cols[static_cast<std::size_t>(k)])
          block[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = val;
      for (int t = 0; t < T.dim(); ++t) {
        rows.push_back(std::move(block[static_cast<std::size_t>(t)]));
        rhs.push_back(chi * wl.at(T.basis[static_cast<std::size_t>(t)]));
      }
    }
  }

  const SolveResult solved = solve_exact(std::move(rows), std::move(rhs));
  if (solved.status == SolveStatus::underdetermined)
    throw std::runtime_error("whittaker: rank-deficient system at degree " +
                             nlohmann::json(d).dump());
  if (solved.status == SolveStatus::inconsistent)
    throw std::runtime_error("whittaker: inconsistent system at degree " +
                             nlohmann::json(d).dump());
  for (int k = 0; k < S.dim(); ++k)
    w.set(S.basis[static_cast<std::size_t>(k)], solved.solution[static_cast<std::size_t>(k)]);
  return memo_.emplace(d, std::move(w)).first->second;
}

WhittakerComponent whittaker_component(const Composition& pi, const DegreeVector& d,
                                       const SpecEnv& env) {
  GTModule mod(pi, env);
  WhittakerEngine engine(mod);
  return {d, engine.component(d)};
}

nlohmann::json whittaker_to_json(const WhittakerComponent& w) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [pat, val] : w.vector.coeffs) coeffs[pattern_key(pat)] = to_string(val);
  return nlohmann::json{{"degree", w.degree}, {"coeffs", coeffs}};
}

const Rat& ShapovalovTable::norm(const GTPattern& pat) {
  auto it = memo_.find(pat);
  if (it != memo_.end()) return it->second;

  const Composition& pi = mod_.pi();
  Rat value;
  bool found = false;
  if (total_degree(degree_of(pat)) == 0) {
    value = 1;
    found = true;
  } else {
    for (int i = 1; i <= pi.n() - 1 && !found; ++i)
      for (int j = 1; j <= i && !found; ++j)
        for (int a = 1; a <= pi.p(j) && !found; ++a) {
          if (pat.at(i, j, a) == 0) continue;
          GTPattern src = pat;
          src.at(i, j, a) -= 1;
          if (!is_valid_pattern(src)) continue;
          const Rat F = f_coeff(pi, src, pat, i, 1, mod_.env());
          if (F == 0) continue;
          const Rat E = e_coeff(pi, pat, src, i, 1 + pi.p(i + 1) - pi.p(i), mod_.env());
          value = E * norm(src) / F;
          found = true;
        }
  }
  if (!found)
    throw std::runtime_error("shapovalov_norm: no increment path with nonzero f-coefficient "
                             "(non-generic env)");
  return memo_.emplace(pat, std::move(value)).first->second;
}

Rat shapovalov_norm(const Composition& pi, const GTPattern& pat, const SpecEnv& env) {
  GTModule mod(pi, env);
  ShapovalovTable table(mod);
  return table.norm(pat);
}

Rat shapovalov_pairing(ShapovalovTable& norms, const WeightVector& v, const WeightVector& w) {
  if (v.degree != w.degree) throw std::invalid_argument("shapovalov_pairing: degree mismatch");
  Rat acc(0);
  for (const auto& [pat, vv] : v.coeffs) {
    const Rat wv = w.at(pat);
    if (wv != 0) acc += vv * wv * norms.norm(pat);
  }
  return acc;
}

Rat shapovalov_pairing(const Composition& pi, const WeightVector& v, const WeightVector& w,
                       const SpecEnv& env) {
  GTModule mod(pi, env);
  ShapovalovTable norms(mod);
  return shapovalov_pairing(norms, v, w);
}

bool highest_weight_check(const Composition& pi, const SpecEnv& env, int order) {
  const GTPattern highest(pi);
  for (int k = 1; k <= pi.n(); ++k) {
    const USeries lhs = d_series(pi, k, highest, env, order);
    // prod_a (1 + c_a t) with c_a = k - 1 + hbar^{-1} x_{offset(k-1)+a},
    // expanded by the elementary-symmetric recursion
    std::vector<Rat> pred(static_cast<std::size_t>(order) + 1, Rat(0));
    pred[0] = 1;
    for (int a = 1; a <= pi.p(k); ++a) {
      const Rat c = Rat(k - 1) + env.x_at(pi.offset(k - 1) + a) / env.hbar;
      for (int s = order; s >= 1; --s) pred[static_cast<std::size_t>(s)] += c * pred[static_cast<std::size_t>(s - 1)];
    }
    if (!(lhs == USeries(std::move(pred), order))) return false;
  }
  return true;
}

}  // namespace zastava
