#include "zastava/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace zastava {

int sign_exponent(const Composition& pi, const DegreeVector& d, SignRule rule) {
  switch (rule) {
    case SignRule::total_degree:
      return total_degree(d);
    case SignRule::rho_pairing: {
      // theta = sum_i d_i * (image of the block-crossing simple coroot);
      // each simple coroot pairs to 1 with rho-check.
      int acc = 0;
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(pi.n()); ++i) acc += d[i] * 1;
      return acc;
    }
  }
  return total_degree(d);
}

Rat PartitionEngine::z_coefficient(const DegreeVector& d, SignRule rule) {
  const WeightVector& w = whittaker_.component(d);
  const Rat pairing = shapovalov_pairing(norms_, w, w);
  if (sign_exponent(mod_.pi(), d, rule) % 2 == 0) return pairing;
  return Rat(-pairing);
}

Rat z_coefficient(const Composition& pi, const DegreeVector& d, const SpecEnv& env,
                  SignRule rule) {
  GTModule mod(pi, env);
  PartitionEngine engine(mod);
  return engine.z_coefficient(d, rule);
}

ZSeries z_series(const Composition& pi, int cap, const SpecEnv& env, SignRule rule) {
  if (cap < 0) throw std::invalid_argument("z_series: cap must be >= 0");
  GTModule mod(pi, env);
  PartitionEngine engine(mod);
  ZSeries out;
  out.pi = pi;
  out.cap = cap;
  out.env = env;
  for (const auto& d : degree_vectors_up_to(pi.n() - 1, cap))
    out.terms[d] = engine.z_coefficient(d, rule);
  return out;
}

nlohmann::json zseries_to_json(const ZSeries& z) {
  nlohmann::json xs = nlohmann::json::array();
  for (const auto& xi : z.env.x) xs.push_back(to_string(xi));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& d : degree_vectors_up_to(z.pi.n() - 1, z.cap))
    terms.push_back({{"d", d}, {"value", to_string(z.terms.at(d))}});
  return nlohmann::json{
      {"pi", z.pi.parts},
      {"env", {{"x", xs}, {"hbar", to_string(z.env.hbar)}, {"seed", z.env.seed}}},
      {"terms", terms}};
}

std::string zseries_to_csv(const ZSeries& z) {
  std::ostringstream os;
  os << "degree,value\n";
  for (const auto& d : degree_vectors_up_to(z.pi.n() - 1, z.cap)) {
    for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "-" : "") << d[k];
    if (d.empty()) os << "0";
    os << "," << to_string(z.terms.at(d)) << "\n";
  }
  return os.str();
}

Rat sl2_oracle(int m, const SpecEnv& env, SL2Orientation orientation) {
  if (env.N != 2) throw std::invalid_argument("sl2_oracle: needs an N = 2 specialization");
  if (m < 0) throw std::invalid_argument("sl2_oracle: m must be >= 0");
  const Rat two_a = orientation == SL2Orientation::x2_minus_x1 ? env.x_at(2) - env.x_at(1)
                                                               : env.x_at(1) - env.x_at(2);
  const Rat lam = -two_a / env.hbar - 1;
  const Rat chi = Rat(1) / env.hbar;

  Rat norm(1), coeff(1);
  for (int k = 1; k <= m; ++k) {
    const Rat step = Rat(k) * (lam - (k - 1));
    if (step == 0) throw std::domain_error("sl2_oracle: degenerate weight (non-generic env)");
    norm *= step;
    coeff = coeff * chi / step;
  }
  const Rat value = coeff * coeff * norm;
  if (m % 2 == 0) return value;
  return Rat(-value);
}

bool wl_invariance_check(const Composition& pi, int cap, std::uint64_t seed) {
  const SpecEnv env = make_spec_env(pi.N(), cap + 4, seed);
  const ZSeries base = z_series(pi, cap, env);

  for (int block = 1; block <= pi.n(); ++block) {
    const int lo = pi.offset(block - 1) + 1;
    const int hi = pi.offset(block);
    for (int idx = lo; idx < hi; ++idx) {
      const SpecEnv permuted = swap_x(env, idx, idx + 1);
      const ZSeries again = z_series(pi, cap, permuted);
      if (again.terms != base.terms) return false;
    }
  }
  return true;
}

}  // namespace zastava
