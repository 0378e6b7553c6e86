#include "zastava/yangian.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace zastava {

namespace {

Rat rat_pow(const Rat& base, int exp) {
  if (exp < 0) throw std::logic_error("rat_pow: negative exponent");
  return pow_int(base, exp);
}

// The unique cell (j, a) of row i where target = source + delta * unit,
// all other cells equal; nullopt if the pair is not of that shape.
std::optional<std::pair<int, int>> single_cell_shift(const GTPattern& src, const GTPattern& tgt,
                                                     int i, int delta) {
  const Composition& pi = src.pi;
  int fj = -1, fa = -1;
  for (int r = 1; r <= pi.n() - 1; ++r)
    for (int j = 1; j <= r; ++j)
      for (int a = 1; a <= pi.p(j); ++a) {
        const int diff = tgt.at(r, j, a) - src.at(r, j, a);
        if (diff == 0) continue;
        if (r != i || diff != delta || fj != -1) return std::nullopt;
        fj = j;
        fa = a;
      }
  if (fj == -1) return std::nullopt;
  return std::make_pair(fj, fa);
}

Rat row_product_inverse(const GTPattern& src, int i, int j, int a, const Rat& p,
                        const SpecEnv& env) {
  Rat denom(1);
  for (int k = 1; k <= i; ++k)
    for (int b = 1; b <= src.pi.p(k); ++b) {
      if (k == j && b == a) continue;
      const Rat diff = p - p_value(src, i, k, b, env);
      if (diff == 0) throw std::domain_error("matrix coefficient: coincident p-values (non-generic env)");
      denom *= diff;
    }
  return Rat(1) / denom;
}

Rat adjacent_row_product(const GTPattern& src, int row, const Rat& p, const SpecEnv& env) {
  Rat num(1);
  for (int k = 1; k <= row; ++k)
    for (int b = 1; b <= src.pi.p(k); ++b) num *= p - p_value(src, row, k, b, env);
  return num;
}

}  // namespace

Rat e_coeff(const Composition& pi, const GTPattern& source, const GTPattern& target, int i, int s,
            const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("e_coeff: generator index out of range");
  if (s < pi.e_min(i))
    throw std::invalid_argument("e_coeff: superscript below the shift range p_{i+1}-p_i+1");
  const auto cell = single_cell_shift(source, target, i, -1);
  if (!cell) return Rat(0);
  const auto [j, a] = *cell;
  const Rat p = p_value(source, i, j, a, env);
  Rat value = rat_pow(p - i * env.hbar, s - 1 - pi.p(i + 1) + pi.p(i)) / env.hbar;
  value *= row_product_inverse(source, i, j, a, p, env);
  value *= adjacent_row_product(source, i + 1, p, env);
  return value;
}

Rat f_coeff(const Composition& pi, const GTPattern& source, const GTPattern& target, int i, int s,
            const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("f_coeff: generator index out of range");
  if (s < 1) throw std::invalid_argument("f_coeff: superscript must be >= 1");
  const auto cell = single_cell_shift(source, target, i, +1);
  if (!cell) return Rat(0);
  const auto [j, a] = *cell;
  const Rat p = p_value(source, i, j, a, env);
  Rat value = -rat_pow(p + (1 - i) * env.hbar, s - 1) / env.hbar;
  value *= row_product_inverse(source, i, j, a, p, env);
  if (i >= 2) value *= adjacent_row_product(source, i - 1, p, env);
  return value;
}

UPoly A_eigenvalue(const Composition& pi, int i, const GTPattern& pat, const SpecEnv& env) {
  if (i < 0 || i > pi.n()) throw std::invalid_argument("A_eigenvalue: row out of range");
  if (i == 0) return UPoly::one();
  std::vector<Rat> roots;
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) roots.push_back(-p_value(pat, i, j, a, env) / env.hbar);
  return poly_from_roots(roots);
}

USeries d_series(const Composition& pi, int k, const GTPattern& pat, const SpecEnv& env,
                 int order) {
  if (k < 1 || k > pi.n()) throw std::invalid_argument("d_series: index out of range");
  if (order < 1) throw std::invalid_argument("d_series: order must be >= 1");
  const Rat shift(k - 1);
  const UPoly num = shift_arg(A_eigenvalue(pi, k, pat, env), shift);
  const UPoly den = shift_arg(A_eigenvalue(pi, k - 1, pat, env), shift);
  return series_from_monic_ratio(num, den, order);
}

Rat d_generator_value(const Composition& pi, int k, int s, const GTPattern& pat,
                      const SpecEnv& env) {
  if (s == 0) return Rat(1);
  return pow_int(env.hbar, s - 1) * d_series(pi, k, pat, env, s).coeff(s);
}

Rat d_prime_generator_value(const Composition& pi, int k, int s, const GTPattern& pat,
                            const SpecEnv& env) {
  if (s == 0) return Rat(1);
  return pow_int(env.hbar, s - 1) * series_inverse(d_series(pi, k, pat, env, s)).coeff(s);
}

int default_series_order(const Composition& pi, int degree_cap) {
  int maxp = 0;
  for (int v : pi.parts) maxp = std::max(maxp, v);
  return degree_cap * maxp + pi.N() + 2;
}

UPoly lambda_poly(const GTPattern& pat, int r, int k, const SpecEnv& env) {
  std::vector<Rat> lam;
  for (int a = 1; a <= pat.pi.p(k); ++a)
    lam.push_back(-p_value(pat, r, k, a, env) / env.hbar + (k - 1));
  return poly_from_roots(lam);
}

// ---------------------------------------------------------------------------
// Laurent helper: value = u^shift * ser(u^{-1}), exact through the series
// truncation order.
// ---------------------------------------------------------------------------
namespace {

struct LaurentU {
  int shift = 0;
  USeries ser;
};

USeries shift_coeffs(const USeries& s, int k) {
  // t^k * s, order extended by k (the new coefficients are exact)
  std::vector<Rat> c(static_cast<std::size_t>(s.order() + k) + 1, Rat(0));
  for (int t = 0; t <= s.order(); ++t) c[static_cast<std::size_t>(t + k)] = s.coeff(t);
  return USeries(std::move(c), s.order() + k);
}

LaurentU laurent_add(const LaurentU& a, const LaurentU& b) {
  const int m = std::max(a.shift, b.shift);
  const USeries sa = shift_coeffs(a.ser, m - a.shift);
  const USeries sb = shift_coeffs(b.ser, m - b.shift);
  return {m, sa + sb};
}

LaurentU laurent_mul(const LaurentU& a, const LaurentU& b) {
  return {a.shift + b.shift, a.ser * b.ser};
}

LaurentU laurent_from_poly(const UPoly& p, int order) {
  if (p.is_zero()) return {0, USeries({}, order)};
  const int deg = p.degree();
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int s = 0; s <= deg && s <= order; ++s) c[static_cast<std::size_t>(s)] = p.coeff(deg - s);
  return {deg, USeries(std::move(c), order)};
}

// Reads off the polynomial part and asserts that every computable coefficient
// of a negative power of u vanishes.
UPoly laurent_to_poly(const LaurentU& L) {
  std::vector<Rat> c;
  if (L.shift >= 0) c.assign(static_cast<std::size_t>(L.shift) + 1, Rat(0));
  for (int s = 0; s <= L.ser.order(); ++s) {
    const int power = L.shift - s;
    if (power >= 0)
      c[static_cast<std::size_t>(power)] = L.ser.coeff(s);
    else if (L.ser.coeff(s) != 0)
      throw std::logic_error("laurent_to_poly: nonvanishing negative tail");
  }
  return UPoly(std::move(c));
}

// sum_{s >= s_min} coeff(s) * hbar^{-s+1} * (u - c)^{-s} as a Laurent object,
// assembled to the given order.
template <typename CoeffFn>
LaurentU generator_current(const Rat& c, int s_min, int order, const Rat& hbar, CoeffFn&& coeff) {
  const USeries lin({Rat(1), -c}, order);
  const USeries inv = series_inverse(lin);
  USeries ipow = USeries::one(order);
  for (int k = 0; k < s_min; ++k) ipow = ipow * inv;

  LaurentU acc{-s_min, USeries({}, order)};
  for (int s = s_min; s <= s_min + order; ++s) {
    const Rat w = coeff(s) * pow_int(hbar, -(s - 1));
    if (w != 0) acc = laurent_add(acc, LaurentU{-s, w * ipow});
    ipow = ipow * inv;
  }
  return acc;
}

}  // namespace

std::map<GTPattern, UPoly> B_series(const Composition& pi, int i, const GTPattern& source,
                                    const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("B_series: index out of range");
  const int q = pi.p(i + 1) - pi.p(i);
  const int order = pi.offset(i) + q + 16;
  const Rat c(i - 1);

  std::map<GTPattern, UPoly> out;
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) {
      if (source.at(i, j, a) == 0) continue;
      GTPattern target = source;
      target.at(i, j, a) -= 1;
      if (!is_valid_pattern(target)) continue;

      LaurentU cur = generator_current(c, pi.e_min(i), order, env.hbar, [&](int s) {
        return e_coeff(pi, source, target, i, s, env);
      });
      cur = laurent_mul(cur, laurent_from_poly(A_eigenvalue(pi, i, target, env), order));
      cur = laurent_mul(
          cur, laurent_from_poly(poly_from_roots(std::vector<Rat>(static_cast<std::size_t>(q), -c)),
                                 order));
      UPoly poly = laurent_to_poly(cur);
      if (poly.degree() > pi.offset(i) - 1)
        throw std::logic_error("B_series: degree bound violated");
      if (!poly.is_zero()) out[target] = poly;
    }
  return out;
}

std::map<GTPattern, UPoly> C_series(const Composition& pi, int i, const GTPattern& source,
                                    const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("C_series: index out of range");
  const int order = pi.offset(i) + 16;
  const Rat c(i - 1);
  const UPoly a_src = A_eigenvalue(pi, i, source, env);

  std::map<GTPattern, UPoly> out;
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) {
      GTPattern target = source;
      target.at(i, j, a) += 1;
      if (!is_valid_pattern(target)) continue;

      LaurentU cur = generator_current(c, 1, order, env.hbar, [&](int s) {
        return f_coeff(pi, source, target, i, s, env);
      });
      cur = laurent_mul(cur, laurent_from_poly(a_src, order));
      UPoly poly = laurent_to_poly(cur);
      if (poly.degree() > pi.offset(i) - 1)
        throw std::logic_error("C_series: degree bound violated");
      if (!poly.is_zero()) out[target] = poly;
    }
  return out;
}

BCPolys interpolate_BC(const Composition& pi, int i, const GTPattern& source, const SpecEnv& env) {
  if (i < 1 || i > pi.n() - 1) throw std::invalid_argument("interpolate_BC: index out of range");
  const int m = pi.offset(i);

  std::vector<Rat> nodes;
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= i; ++j)
    for (int a = 1; a <= pi.p(j); ++a) {
      nodes.push_back(p_value(source, i, j, a, env) / env.hbar);
      cells.emplace_back(j, a);
    }
  for (std::size_t s = 0; s < nodes.size(); ++s)
    for (std::size_t t = s + 1; t < nodes.size(); ++t)
      if (nodes[s] == nodes[t])
        throw std::domain_error("interpolate_BC: coincident nodes (non-generic env)");

  BCPolys out;
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const auto [j, a] = cells[idx];
    const Rat& v = nodes[idx];

    if (source.at(i, j, a) >= 1) {
      GTPattern target = source;
      target.at(i, j, a) -= 1;
      if (is_valid_pattern(target)) {
        Rat val = pow_int(env.hbar, pi.p(i));
        for (int k = 1; k <= i + 1; ++k)
          val *= eval(lambda_poly(source, i + 1, k, env), v - (k - 1));
        std::vector<Rat> values(static_cast<std::size_t>(m), Rat(0));
        values[idx] = val;
        UPoly poly = lagrange_interpolate(nodes, values);
        if (!poly.is_zero()) out.B[target] = poly;
      }
    }
    {
      GTPattern target = source;
      target.at(i, j, a) += 1;
      if (is_valid_pattern(target)) {
        Rat val = -pow_int(env.hbar, -pi.p(i));
        for (int k = 1; k <= i - 1; ++k)
          val *= eval(lambda_poly(source, i - 1, k, env), v - (k - 1));
        std::vector<Rat> values(static_cast<std::size_t>(m), Rat(0));
        values[idx] = val;
        UPoly poly = lagrange_interpolate(nodes, values);
        if (!poly.is_zero()) out.C[target] = poly;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight vectors
// ---------------------------------------------------------------------------

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  if (a.degree != b.degree) throw std::invalid_argument("WeightVector +: degree mismatch");
  WeightVector out = a;
  for (const auto& [pat, v] : b.coeffs) out.set(pat, out.at(pat) + v);
  return out;
}

WeightVector operator*(const Rat& s, const WeightVector& a) {
  WeightVector out(a.pi, a.degree);
  if (s == 0) return out;
  for (const auto& [pat, v] : a.coeffs) out.coeffs[pat] = s * v;
  return out;
}

WeightVector apply_generator(const GenLabel& op, const WeightVector& v, const SpecEnv& env) {
  const Composition& pi = v.pi;
  if (op.kind == 'd') {
    WeightVector out(pi, v.degree);
    for (const auto& [pat, coef] : v.coeffs)
      out.set(pat, coef * d_generator_value(pi, op.i, op.s, pat, env));
    return out;
  }
  const int delta = op.kind == 'e' ? -1 : +1;
  const DegreeVector out_deg = shifted(v.degree, op.i, delta);
  WeightVector out(pi, out_deg);
  if (!nonnegative(out_deg)) return out;

  for (const auto& [pat, coef] : v.coeffs)
    for (int j = 1; j <= op.i; ++j)
      for (int a = 1; a <= pi.p(j); ++a) {
        if (delta == -1 && pat.at(op.i, j, a) == 0) continue;
        GTPattern target = pat;
        target.at(op.i, j, a) += delta;
        if (!is_valid_pattern(target)) continue;
        const Rat c = op.kind == 'e' ? e_coeff(pi, pat, target, op.i, op.s, env)
                                     : f_coeff(pi, pat, target, op.i, op.s, env);
        if (c != 0) out.set(target, out.at(target) + coef * c);
      }
  return out;
}

Rat psi_factor(const Composition& pi, const DegreeVector& degree, const SpecEnv& env) {
  long weighted = 0;
  for (int i = 1; i <= pi.n() - 1; ++i)
    weighted += static_cast<long>(degree.at(static_cast<std::size_t>(i - 1))) * pi.p(i);
  const Rat sign = total_degree(degree) % 2 == 0 ? Rat(1) : Rat(-1);
  return sign * pow_int(env.hbar, weighted);
}

WeightVector to_fmo(const WeightVector& v, Normalization target, const SpecEnv& env) {
  const Rat factor = psi_factor(v.pi, v.degree, env);
  return (target == Normalization::fmo ? factor : Rat(1) / factor) * v;
}

// ---------------------------------------------------------------------------
// Sparse operators and the cached module context
// ---------------------------------------------------------------------------

SparseOp compose(const SparseOp& after, const SparseOp& first) {
  if (first.dst_degree != after.src_degree)
    throw std::invalid_argument("compose: degree mismatch");
  SparseOp out;
  out.src_degree = first.src_degree;
  out.dst_degree = after.dst_degree;
  out.src_dim = first.src_dim;
  out.dst_dim = after.dst_dim;
  out.cols.resize(static_cast<std::size_t>(out.src_dim));
  for (int k = 0; k < first.src_dim; ++k) {
    std::map<int, Rat> acc;
    for (const auto& [mid, c1] : first.cols[static_cast<std::size_t>(k)])
      for (const auto& [tgt, c2] : after.cols[static_cast<std::size_t>(mid)]) acc[tgt] += c2 * c1;
    for (auto& [tgt, val] : acc)
      if (val != 0) out.cols[static_cast<std::size_t>(k)][tgt] = val;
  }
  return out;
}

namespace {
SparseOp combine(const SparseOp& a, const SparseOp& b, int sign) {
  if (a.src_degree != b.src_degree || a.dst_degree != b.dst_degree)
    throw std::invalid_argument("SparseOp +/-: degree mismatch");
  SparseOp out = a;
  for (int k = 0; k < b.src_dim; ++k)
    for (const auto& [tgt, val] : b.cols[static_cast<std::size_t>(k)]) {
      auto& cell = out.cols[static_cast<std::size_t>(k)][tgt];
      cell += sign * val;
      if (cell == 0) out.cols[static_cast<std::size_t>(k)].erase(tgt);
    }
  return out;
}
}  // namespace

SparseOp operator+(const SparseOp& a, const SparseOp& b) { return combine(a, b, +1); }
SparseOp operator-(const SparseOp& a, const SparseOp& b) { return combine(a, b, -1); }

SparseOp operator*(const Rat& s, const SparseOp& a) {
  SparseOp out = a;
  if (s == 0) {
    for (auto& col : out.cols) col.clear();
    return out;
  }
  for (auto& col : out.cols)
    for (auto& [tgt, val] : col) val *= s;
  return out;
}

const PatternSpace& GTModule::space(const DegreeVector& d) {
  auto it = spaces_.find(d);
  if (it == spaces_.end()) it = spaces_.emplace(d, PatternSpace(pi_, d)).first;
  return it->second;
}

const SparseOp& GTModule::generator(char kind, int i, int s, const DegreeVector& src) {
  const auto key = std::make_tuple(kind, i, s, src);
  auto it = gens_.find(key);
  if (it != gens_.end()) return it->second;

  const int delta = kind == 'e' ? -1 : +1;
  const PatternSpace& S = space(src);
  const PatternSpace& T = space(shifted(src, i, delta));

  SparseOp op;
  op.src_degree = S.degree;
  op.dst_degree = T.degree;
  op.src_dim = S.dim();
  op.dst_dim = T.dim();
  op.cols.resize(static_cast<std::size_t>(op.src_dim));

  Rat dress(1);
  if (norm_ == Normalization::fmo)
    dress = kind == 'e' ? -pow_int(env_.hbar, -pi_.p(i)) : -pow_int(env_.hbar, pi_.p(i));

  for (int k = 0; k < S.dim(); ++k) {
    const GTPattern& src_pat = S.basis[static_cast<std::size_t>(k)];
    for (int j = 1; j <= i; ++j)
      for (int a = 1; a <= pi_.p(j); ++a) {
        if (delta == -1 && src_pat.at(i, j, a) == 0) continue;
        GTPattern target = src_pat;
        target.at(i, j, a) += delta;
        const int t = T.find(target);
        if (t < 0) continue;
        const Rat c = kind == 'e' ? e_coeff(pi_, src_pat, target, i, s, env_)
                                  : f_coeff(pi_, src_pat, target, i, s, env_);
        if (c != 0) op.cols[static_cast<std::size_t>(k)][t] = dress * c;
      }
  }
  return gens_.emplace(key, std::move(op)).first->second;
}

const USeries& GTModule::sigma(int k, const GTPattern& pat, int order) {
  const auto key = std::make_pair(pat.cells, k);
  auto it = sigma_.find(key);
  if (it == sigma_.end() || it->second.order() < order) {
    USeries s = d_series(pi_, k, pat, env_, std::max(order, 1));
    sigma_inv_[key] = series_inverse(s);
    it = sigma_.insert_or_assign(key, std::move(s)).first;
  }
  return it->second;
}

const USeries& GTModule::sigma_inv(int k, const GTPattern& pat, int order) {
  sigma(k, pat, order);
  return sigma_inv_.at(std::make_pair(pat.cells, k));
}

Rat GTModule::d_value(int k, int r, const GTPattern& pat) {
  if (r == 0) return Rat(1);
  return pow_int(env_.hbar, r - 1) * sigma(k, pat, r).coeff(r);
}

Rat GTModule::d_prime_value(int k, int r, const GTPattern& pat) {
  if (r == 0) return Rat(1);
  return pow_int(env_.hbar, r - 1) * sigma_inv(k, pat, r).coeff(r);
}

namespace {
template <typename Fn>
SparseOp diagonal_from(const PatternSpace& S, Fn&& eigen) {
  SparseOp op;
  op.src_degree = op.dst_degree = S.degree;
  op.src_dim = op.dst_dim = S.dim();
  op.cols.resize(static_cast<std::size_t>(S.dim()));
  for (int k = 0; k < S.dim(); ++k) {
    const Rat v = eigen(S.basis[static_cast<std::size_t>(k)]);
    if (v != 0) op.cols[static_cast<std::size_t>(k)][k] = v;
  }
  return op;
}
}  // namespace

SparseOp GTModule::diagonal_d(int k, int r, const DegreeVector& d) {
  return diagonal_from(space(d), [&](const GTPattern& pat) { return d_value(k, r, pat); });
}

SparseOp GTModule::diagonal_d_prime(int k, int r, const DegreeVector& d) {
  return diagonal_from(space(d), [&](const GTPattern& pat) { return d_prime_value(k, r, pat); });
}

SparseOp GTModule::diagonal_ef_rhs(int i, int m, const DegreeVector& d) {
  return diagonal_from(space(d), [&](const GTPattern& pat) -> Rat {
    const USeries& si = sigma_inv(i, pat, m);
    const USeries& sn = sigma(i + 1, pat, m);
    Rat conv(0);
    for (int t = 0; t <= m; ++t) conv += si.coeff(t) * sn.coeff(m - t);
    conv *= pow_int(env_.hbar, m - 1);
    return conv;
  });
}

SparseOp GTModule::zero_op(const DegreeVector& src, const DegreeVector& dst) {
  SparseOp op;
  op.src_degree = src;
  op.dst_degree = dst;
  op.src_dim = space(src).dim();
  op.dst_dim = space(dst).dim();
  op.cols.resize(static_cast<std::size_t>(op.src_dim));
  return op;
}

}  // namespace zastava
