#include "zastava/virasoro.hpp"

#include <functional>

#include "zastava/linsolve.hpp"
#include "zastava/prng.hpp"

namespace zastava {

std::vector<VirPartition> partitions_of(int d) {
  std::vector<VirPartition> out;
  VirPartition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

namespace {

// L_n applied to one PBW word, reduced back to PBW order.
VirState mode_on_word(const VirParams& params, int n, const VirPartition& word) {
  VirState out;
  if (word.empty()) {
    if (n > 0) return out;
    if (n == 0) {
      out.add({}, params.delta);
      return out;
    }
    out.add({-n}, Rat(1));
    return out;
  }
  const int mu = word[0];
  if (n < 0 && -n >= mu) {
    VirPartition w;
    w.reserve(word.size() + 1);
    w.push_back(-n);
    w.insert(w.end(), word.begin(), word.end());
    out.add(w, Rat(1));
    return out;
  }

  const VirPartition rest(word.begin() + 1, word.end());
  // L_n L_{-mu} = L_{-mu} L_n + (n + mu) L_{n - mu} + delta_{n,mu} (c/12)(n^3 - n)
  const VirState tail = mode_on_word(params, n, rest);
  for (const auto& [w, v] : tail.terms) {
    const VirState pre = mode_on_word(params, -mu, w);  // normal-ordered prepend
    for (const auto& [w2, v2] : pre.terms) out.add(w2, v * v2);
  }
  const VirState central = mode_on_word(params, n - mu, rest);
  const Rat weight(n + mu);
  for (const auto& [w, v] : central.terms) out.add(w, weight * v);
  if (n == mu) out.add(rest, params.c / 12 * (Rat(n) * n * n - n));
  return out;
}

}  // namespace

VirState apply_mode(const VirParams& params, int n, const VirState& state) {
  VirState out;
  for (const auto& [w, v] : state.terms) {
    const VirState part = mode_on_word(params, n, w);
    for (const auto& [w2, v2] : part.terms) out.add(w2, v * v2);
  }
  return out;
}

std::vector<std::vector<Rat>> vir_gram(const VirParams& params, int d) {
  const auto basis = partitions_of(d);
  const std::size_t dim = basis.size();
  std::vector<std::vector<Rat>> gram(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      // <L_{-mu} m, L_{-nu} m> = vacuum coefficient of L_{mu_k} ... L_{mu_1} L_{-nu} m
      VirState state{{{basis[c], Rat(1)}}};
      for (int part : basis[r]) state = apply_mode(params, part, state);
      gram[r][c] = state.at({});
    }
  return gram;
}

VirState vir_whittaker(const VirParams& params, int d) {
  std::vector<VirState> levels(static_cast<std::size_t>(d) + 1);
  levels[0].add({}, Rat(1));
  for (int lvl = 1; lvl <= d; ++lvl) {
    const auto basis = partitions_of(lvl);
    const int dim = static_cast<int>(basis.size());

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (int i = 1; i <= lvl; ++i) {
      const auto targets = partitions_of(lvl - i);
      // coefficients of L_i on each basis word
      std::vector<VirState> images(static_cast<std::size_t>(dim));
      for (int k = 0; k < dim; ++k)
        images[static_cast<std::size_t>(k)] =
            apply_mode(params, i, VirState{{{basis[static_cast<std::size_t>(k)], Rat(1)}}});
      for (const auto& tau : targets) {
        std::vector<Rat> row(static_cast<std::size_t>(dim), Rat(0));
        for (int k = 0; k < dim; ++k) row[static_cast<std::size_t>(k)] = images[static_cast<std::size_t>(k)].at(tau);
        rows.push_back(std::move(row));
        rhs.push_back(i == 1 ? levels[static_cast<std::size_t>(lvl - 1)].at(tau) : Rat(0));
      }
    }

    const SolveResult solved = solve_exact(std::move(rows), std::move(rhs));
    if (solved.status != SolveStatus::unique) throw DegenerateLevelError(lvl);
    for (int k = 0; k < dim; ++k)
      levels[static_cast<std::size_t>(lvl)].add(basis[static_cast<std::size_t>(k)],
                                                solved.solution[static_cast<std::size_t>(k)]);
  }
  return levels[static_cast<std::size_t>(d)];
}

std::vector<Rat> nekrasov_series(const VirParams& params, int cap) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(cap) + 1);
  for (int d = 0; d <= cap; ++d) {
    const VirState w = vir_whittaker(params, d);
    const auto basis = partitions_of(d);
    const auto gram = vir_gram(params, d);
    Rat norm(0);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c)
        norm += w.at(basis[r]) * gram[r][c] * w.at(basis[c]);
    out.push_back(norm);
  }
  return out;
}

VirParams agt_params(const Rat& a, const Rat& eps1, const Rat& eps2) {
  const Rat prod = eps1 * eps2;
  if (prod == 0) throw std::invalid_argument("agt_params: eps1*eps2 must be nonzero");
  const Rat sum2 = (eps1 + eps2) * (eps1 + eps2);
  return {-a * a / prod + sum2 / (4 * prod), Rat(1) + 6 * sum2 / prod};
}

VirParams ff_params(const Rat& chi, const Rat& k) {
  if (k == -2) throw std::invalid_argument("ff_params: k = -2 is the critical level");
  const Rat kp1 = (k + 1) * (k + 1);
  return {((chi + 1) * (chi + 1) - kp1) / (4 * (k + 2)), Rat(1) - 6 * kp1 / (k + 2)};
}

std::pair<Rat, Rat> chic_map(const Rat& a, const Rat& eps1, const Rat& eps2) {
  if (eps2 == 0) throw std::invalid_argument("chic_map: eps2 must be nonzero");
  return {-2 * a / eps2 - 1, -eps1 / eps2 - 2};
}

bool dictionary_check(int trials, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xa5a5a5a5deadbeefULL);
  auto nonzero_rat = [&]() {
    long num = 0;
    while (num == 0) num = rng.range(-40, 40);
    return rat(num, rng.range(1, 5));
  };
  for (int t = 0; t < trials; ++t) {
    const Rat a = rat(rng.range(-40, 40), rng.range(1, 5));
    const Rat eps1 = nonzero_rat();
    const Rat eps2 = nonzero_rat();
    const auto [chi, k] = chic_map(a, eps1, eps2);
    const VirParams lhs = ff_params(chi, k);
    const VirParams rhs = agt_params(a, eps1, eps2);
    if (lhs.delta != rhs.delta || lhs.c != rhs.c) return false;
  }
  return true;
}

nlohmann::json virasoro_to_json(const VirParams& params, const std::vector<Rat>& norms) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t d = 0; d < norms.size(); ++d) {
    const Rat signed_norm = d % 2 == 0 ? norms[d] : Rat(-norms[d]);
    levels.push_back({{"d", d},
                      {"norm", to_string(norms[d])},
                      {"norm_q_signed", to_string(signed_norm)}});
  }
  return nlohmann::json{{"delta", to_string(params.delta)},
                        {"c", to_string(params.c)},
                        {"series", "conjectural instanton series (Whittaker-norm side)"},
                        {"levels", levels}};
}

}  // namespace zastava
