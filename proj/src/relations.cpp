#include "zastava/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "zastava/parallel.hpp"

namespace zastava {

std::string rel_name(RelId rel) {
  switch (rel) {
    case RelId::a: return "a";
    case RelId::b: return "b";
    case RelId::c: return "c";
    case RelId::d: return "d";
    case RelId::e: return "e";
    case RelId::f: return "f";
    case RelId::g: return "g";
    case RelId::h: return "h";
    case RelId::i: return "i";
    case RelId::j: return "j";
    case RelId::k: return "k";
    case RelId::l: return "l";
    case RelId::truncation: return "truncation";
  }
  return "?";
}

RelId rel_from_name(const std::string& name) {
  if (name == "truncation") return RelId::truncation;
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'l')
    return static_cast<RelId>(name[0] - 'a');
  throw std::invalid_argument("unknown relation '" + name + "'");
}

int default_superscript_bound(const Composition& pi, int degree_cap) {
  int maxp = 0, maxgap = 0;
  for (int v : pi.parts) maxp = std::max(maxp, v);
  for (int i = 1; i <= pi.n() - 1; ++i) maxgap = std::max(maxgap, pi.p(i + 1) - pi.p(i));
  return degree_cap * maxp + maxgap + 2;
}

namespace {

struct Instance {
  DegreeVector degree;
  int i = 0, j = 0, r = 0, s = 0, t = 0;
  bool has_j = false, has_r = false, has_s = false, has_t = false;

  nlohmann::json to_json() const {
    nlohmann::json inst{{"i", i}};
    if (has_j) inst["j"] = j;
    if (has_r) inst["r"] = r;
    if (has_s) inst["s"] = s;
    if (has_t) inst["t"] = t;
    return inst;
  }
};

SparseOp word2(GTModule& mod, const GenLabel& outer, const GenLabel& inner,
               const DegreeVector& src) {
  auto step = [&](const GenLabel& g, const DegreeVector& d) -> SparseOp {
    if (g.kind == 'd') return mod.diagonal_d(g.i, g.s, d);
    return mod.generator(g.kind, g.i, g.s, d);
  };
  const SparseOp first = step(inner, src);
  return compose(step(outer, first.dst_degree), first);
}

SparseOp commutator(GTModule& mod, const GenLabel& x, const GenLabel& y, const DegreeVector& src) {
  return word2(mod, x, y, src) - word2(mod, y, x, src);
}

// left side / right side of one relation instance
struct Sides {
  SparseOp lhs, rhs;
};

Sides build_instance(GTModule& mod, RelId rel, const Instance& in) {
  const Rat& hbar = mod.env().hbar;
  const DegreeVector& d = in.degree;

  const auto E = [&](int idx, int sup) { return GenLabel{'e', idx, sup}; };
  const auto F = [&](int idx, int sup) { return GenLabel{'f', idx, sup}; };
  const auto D = [&](int idx, int sup) { return GenLabel{'d', idx, sup}; };

  switch (rel) {
    case RelId::a: {
      Sides out;
      out.lhs = commutator(mod, D(in.i, in.r), D(in.j, in.s), d);
      out.rhs = mod.zero_op(d, d);
      return out;
    }
    case RelId::b: {
      // [e_i^{(r)}, f_j^{(s)}] = -delta_ij hbar^{m-1} [u^{-m}] d'_i(u) d_{i+1}(u),
      // m = r+s-1.  The u^{-1}-series bookkeeping absorbs the boundary terms
      // of the printed sum -hbar * sum_t d'^{(t)} d^{(m-t)}.
      Sides out;
      out.lhs = commutator(mod, E(in.i, in.r), F(in.j, in.s), d);
      if (in.i == in.j)
        out.rhs = Rat(-1) * mod.diagonal_ef_rhs(in.i, in.r + in.s - 1, d);
      else
        out.rhs = mod.zero_op(d, shifted(shifted(d, in.i, -1), in.j, +1));
      return out;
    }
    case RelId::c: {
      // [d_i^{(r)}, e_j^{(s)}] = (delta_ij - delta_{i,j+1})
      //   ( e_j^{(r+s-1)} + hbar sum_{t=1}^{r-1} d_i^{(t)} e_j^{(r+s-t-1)} )
      Sides out;
      out.lhs = commutator(mod, D(in.i, in.r), E(in.j, in.s), d);
      const int sign = (in.i == in.j ? 1 : 0) - (in.i == in.j + 1 ? 1 : 0);
      if (sign == 0) {
        out.rhs = mod.zero_op(d, shifted(d, in.j, -1));
      } else {
        SparseOp acc = mod.generator('e', in.j, in.r + in.s - 1, d);
        for (int t = 1; t <= in.r - 1; ++t)
          acc = acc + hbar * word2(mod, D(in.i, t), E(in.j, in.r + in.s - t - 1), d);
        out.rhs = Rat(sign) * acc;
      }
      return out;
    }
    case RelId::d: {
      // [d_i^{(r)}, f_j^{(s)}] = (delta_{i,j+1} - delta_ij)
      //   ( f_j^{(r+s-1)} + hbar sum_{t=1}^{r-1} f_j^{(r+s-t-1)} d_i^{(t)} )
      Sides out;
      out.lhs = commutator(mod, D(in.i, in.r), F(in.j, in.s), d);
      const int sign = (in.i == in.j + 1 ? 1 : 0) - (in.i == in.j ? 1 : 0);
      if (sign == 0) {
        out.rhs = mod.zero_op(d, shifted(d, in.j, +1));
      } else {
        SparseOp acc = mod.generator('f', in.j, in.r + in.s - 1, d);
        for (int t = 1; t <= in.r - 1; ++t)
          acc = acc + hbar * word2(mod, F(in.j, in.r + in.s - t - 1), D(in.i, t), d);
        out.rhs = Rat(sign) * acc;
      }
      return out;
    }
    case RelId::e: {
      Sides out;
      out.lhs = commutator(mod, E(in.i, in.r), E(in.i, in.s + 1), d) -
                commutator(mod, E(in.i, in.r + 1), E(in.i, in.s), d);
      out.rhs = hbar * (word2(mod, E(in.i, in.r), E(in.i, in.s), d) +
                        word2(mod, E(in.i, in.s), E(in.i, in.r), d));
      return out;
    }
    case RelId::f: {
      Sides out;
      out.lhs = commutator(mod, F(in.i, in.r + 1), F(in.i, in.s), d) -
                commutator(mod, F(in.i, in.r), F(in.i, in.s + 1), d);
      out.rhs = hbar * (word2(mod, F(in.i, in.r), F(in.i, in.s), d) +
                        word2(mod, F(in.i, in.s), F(in.i, in.r), d));
      return out;
    }
    case RelId::g: {
      Sides out;
      out.lhs = commutator(mod, E(in.i, in.r), E(in.i + 1, in.s + 1), d) -
                commutator(mod, E(in.i, in.r + 1), E(in.i + 1, in.s), d);
      out.rhs = Rat(-1) * (hbar * word2(mod, E(in.i, in.r), E(in.i + 1, in.s), d));
      return out;
    }
    case RelId::h: {
      Sides out;
      out.lhs = commutator(mod, F(in.i, in.r + 1), F(in.i + 1, in.s), d) -
                commutator(mod, F(in.i, in.r), F(in.i + 1, in.s + 1), d);
      out.rhs = Rat(-1) * (hbar * word2(mod, F(in.i + 1, in.s), F(in.i, in.r), d));
      return out;
    }
    case RelId::i: {
      Sides out;
      out.lhs = commutator(mod, E(in.i, in.r), E(in.j, in.s), d);
      out.rhs = mod.zero_op(d, shifted(shifted(d, in.i, -1), in.j, -1));
      return out;
    }
    case RelId::j: {
      Sides out;
      out.lhs = commutator(mod, F(in.i, in.r), F(in.j, in.s), d);
      out.rhs = mod.zero_op(d, shifted(shifted(d, in.i, +1), in.j, +1));
      return out;
    }
    case RelId::k: {
      // [e_i^{(r)}, [e_i^{(s)}, e_j^{(t)}]] + (r <-> s) = 0.  The inner
      // commutator is rebuilt at the shifted source degree on the right leg.
      const auto serre_term = [&](int outer_sup, int inner_sup) {
        const auto inner = [&](const DegreeVector& src) {
          return commutator(mod, E(in.i, inner_sup), E(in.j, in.t), src);
        };
        const SparseOp Yd = inner(d);
        const SparseOp xY = compose(mod.generator('e', in.i, outer_sup, Yd.dst_degree), Yd);
        const SparseOp Yx = compose(inner(shifted(d, in.i, -1)), mod.generator('e', in.i, outer_sup, d));
        return xY - Yx;
      };
      Sides out;
      out.lhs = serre_term(in.r, in.s) + serre_term(in.s, in.r);
      out.rhs = mod.zero_op(d, shifted(shifted(shifted(d, in.i, -1), in.i, -1), in.j, -1));
      return out;
    }
    case RelId::l: {
      const auto serre_term = [&](int outer_sup, int inner_sup) {
        const auto inner = [&](const DegreeVector& src) {
          return commutator(mod, F(in.i, inner_sup), F(in.j, in.t), src);
        };
        const SparseOp Yd = inner(d);
        const SparseOp xY = compose(mod.generator('f', in.i, outer_sup, Yd.dst_degree), Yd);
        const SparseOp Yx = compose(inner(shifted(d, in.i, +1)), mod.generator('f', in.i, outer_sup, d));
        return xY - Yx;
      };
      Sides out;
      out.lhs = serre_term(in.r, in.s) + serre_term(in.s, in.r);
      out.rhs = mod.zero_op(d, shifted(shifted(shifted(d, in.i, +1), in.i, +1), in.j, +1));
      return out;
    }
    case RelId::truncation: {
      Sides out;
      out.lhs = mod.diagonal_d(1, in.r, d);
      out.rhs = mod.zero_op(d, d);
      return out;
    }
  }
  throw std::logic_error("build_instance: unreachable");
}

std::vector<Instance> list_instances(const Composition& pi, RelId rel, int cap, int bound) {
  std::vector<Instance> out;
  const int n = pi.n();
  const auto degrees = degree_vectors_up_to(n - 1, cap);
  const auto emin = [&](int i) { return pi.e_min(i); };

  for (const auto& d : degrees) {
    Instance base;
    base.degree = d;
    switch (rel) {
      case RelId::a:
        for (int i = 1; i <= n; ++i)
          for (int j = i; j <= n; ++j)
            for (int r = 1; r <= bound; ++r)
              for (int s = 1; s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
        break;
      case RelId::b:
        for (int i = 1; i <= n - 1; ++i)
          for (int j = 1; j <= n - 1; ++j)
            for (int r = emin(i); r <= bound; ++r)
              for (int s = 1; s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
        break;
      case RelId::c:
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n - 1; ++j)
            for (int r = 1; r <= bound; ++r)
              for (int s = emin(j); s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
        break;
      case RelId::d:
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n - 1; ++j)
            for (int r = 1; r <= bound; ++r)
              for (int s = 1; s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
        break;
      case RelId::e:
        for (int i = 1; i <= n - 1; ++i)
          for (int r = emin(i); r <= bound; ++r)
            for (int s = emin(i); s <= bound; ++s) {
              Instance in = base;
              in.i = i; in.r = r; in.s = s;
              in.has_r = in.has_s = true;
              out.push_back(in);
            }
        break;
      case RelId::f:
        for (int i = 1; i <= n - 1; ++i)
          for (int r = 1; r <= bound; ++r)
            for (int s = 1; s <= bound; ++s) {
              Instance in = base;
              in.i = i; in.r = r; in.s = s;
              in.has_r = in.has_s = true;
              out.push_back(in);
            }
        break;
      case RelId::g:
        for (int i = 1; i <= n - 2; ++i)
          for (int r = emin(i); r <= bound; ++r)
            for (int s = emin(i + 1); s <= bound; ++s) {
              Instance in = base;
              in.i = i; in.r = r; in.s = s;
              in.has_r = in.has_s = true;
              out.push_back(in);
            }
        break;
      case RelId::h:
        for (int i = 1; i <= n - 2; ++i)
          for (int r = 1; r <= bound; ++r)
            for (int s = 1; s <= bound; ++s) {
              Instance in = base;
              in.i = i; in.r = r; in.s = s;
              in.has_r = in.has_s = true;
              out.push_back(in);
            }
        break;
      case RelId::i:
        for (int i = 1; i <= n - 1; ++i)
          for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) <= 1) continue;
            for (int r = emin(i); r <= bound; ++r)
              for (int s = emin(j); s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
          }
        break;
      case RelId::j:
        for (int i = 1; i <= n - 1; ++i)
          for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) <= 1) continue;
            for (int r = 1; r <= bound; ++r)
              for (int s = 1; s <= bound; ++s) {
                Instance in = base;
                in.i = i; in.j = j; in.r = r; in.s = s;
                in.has_j = in.has_r = in.has_s = true;
                out.push_back(in);
              }
          }
        break;
      case RelId::k:
        for (int i = 1; i <= n - 1; ++i)
          for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) != 1) continue;
            for (int r = emin(i); r <= bound; ++r)
              for (int s = r; s <= bound; ++s)  // symmetric in (r, s)
                for (int t = emin(j); t <= bound; ++t) {
                  Instance in = base;
                  in.i = i; in.j = j; in.r = r; in.s = s; in.t = t;
                  in.has_j = in.has_r = in.has_s = in.has_t = true;
                  out.push_back(in);
                }
          }
        break;
      case RelId::l:
        for (int i = 1; i <= n - 1; ++i)
          for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) != 1) continue;
            for (int r = 1; r <= bound; ++r)
              for (int s = r; s <= bound; ++s)
                for (int t = 1; t <= bound; ++t) {
                  Instance in = base;
                  in.i = i; in.j = j; in.r = r; in.s = s; in.t = t;
                  in.has_j = in.has_r = in.has_s = in.has_t = true;
                  out.push_back(in);
                }
          }
        break;
      case RelId::truncation:
        for (int r = pi.p(1) + 1; r <= bound; ++r) {
          Instance in = base;
          in.i = 1;
          in.r = r;
          in.has_r = true;
          out.push_back(in);
        }
        break;
    }
  }
  return out;
}

// first mismatching entry, as (column pattern index, row, lhs, rhs)
nlohmann::json first_mismatch(const SparseOp& lhs, const SparseOp& rhs) {
  for (int k = 0; k < lhs.src_dim; ++k) {
    std::map<int, Rat> merged = lhs.cols[static_cast<std::size_t>(k)];
    for (const auto& [t, v] : rhs.cols[static_cast<std::size_t>(k)]) merged.try_emplace(t, Rat(0));
    for (const auto& [t, unused] : merged) {
      (void)unused;
      auto lv = lhs.cols[static_cast<std::size_t>(k)].count(t)
                    ? lhs.cols[static_cast<std::size_t>(k)].at(t)
                    : Rat(0);
      auto rv = rhs.cols[static_cast<std::size_t>(k)].count(t)
                    ? rhs.cols[static_cast<std::size_t>(k)].at(t)
                    : Rat(0);
      if (lv != rv)
        return nlohmann::json{{"entry", {t, k}}, {"lhs", to_string(lv)}, {"rhs", to_string(rv)}};
    }
  }
  return nlohmann::json();
}

}  // namespace

RelationResult verify_relation(RelId rel, const Composition& pi, int degree_cap,
                               const SpecEnv& env, int trials, const VerifyOptions& opts) {
  if (trials < 1) throw std::invalid_argument("verify_relation: trials must be >= 1");
  const int bound =
      opts.superscript_bound > 0 ? opts.superscript_bound : default_superscript_bound(pi, degree_cap);
  const auto instances = list_instances(pi, rel, degree_cap, bound);

  struct TrialOutcome {
    bool ok = true;
    nlohmann::json witness;
  };
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

  parallel_for(trials, [&](int trial) {
    const SpecEnv trial_env =
        trial == 0 ? env : make_spec_env(env.N, env.genericity_cap, env.seed + 7919u * trial);
    GTModule mod(pi, trial_env, opts.norm);
    bool mutation_pending = opts.mutate && trial == 0;

    for (const auto& in : instances) {
      Sides sides = build_instance(mod, rel, in);
      if (mutation_pending && sides.lhs.src_dim > 0 && sides.lhs.dst_dim > 0) {
        auto& cell = sides.rhs.cols[0][0];
        cell += 1;
        if (cell == 0) sides.rhs.cols[0].erase(0);
        mutation_pending = false;
      }
      if (!(sides.lhs == sides.rhs)) {
        nlohmann::json w{{"relation", rel_name(rel)},
                         {"pi", pi.parts},
                         {"degree", in.degree},
                         {"instance", in.to_json()},
                         {"trial", trial}};
        const nlohmann::json mism = first_mismatch(sides.lhs, sides.rhs);
        if (!mism.is_null()) {
          w["lhs"] = mism["lhs"];
          w["rhs"] = mism["rhs"];
          w["entry"] = mism["entry"];
        }
        outcomes[static_cast<std::size_t>(trial)] = {false, w};
        return;
      }
    }
  });

  RelationResult result;
  result.instances = static_cast<long>(instances.size()) * trials;
  for (const auto& o : outcomes)
    if (!o.ok) {
      result.ok = false;
      result.witness = o.witness;
      break;
    }
  return result;
}

}  // namespace zastava
