#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "zastava/composition.hpp"
#include "zastava/gt_pattern.hpp"
#include "zastava/rational.hpp"
#include "zastava/spec_env.hpp"
#include "zastava/upoly.hpp"
#include "zastava/useries.hpp"

namespace zastava {

// Two bases of the same module, differing by the diagonal map
//   [pattern] -> (-1)^{|d|} hbar^{sum_i d_i p_i} xi_pattern.
// GEOMETRIC is the fixed-point-class normalization (the default everywhere);
// FMO is the Gelfand-Tsetlin-side normalization whose e/f coefficients carry
// the extra -hbar^{-p_i} / -hbar^{+p_i} dressing.
enum class Normalization { geometric, fmo };

// ---------------------------------------------------------------------------
// Matrix coefficients in the fixed-point basis (GEOMETRIC normalization).
//
// Conventions, fixed once for the whole library:
//   * e_i^{(s)} lowers d_i by 1, f_i^{(s)} raises it, d_k^{(r)} is diagonal.
//   * p-values are evaluated on the SOURCE pattern of the matrix element.
//   * s >= p_{i+1} - p_i + 1 for e (throws below the range), s >= 1 for f.
//
//   e: hbar^{-1} (p_{ij}^{(a)} - i hbar)^{s-1-p_{i+1}+p_i}
//        * prod_{(k,b) in row i, != (j,a)} (p_{ij}^{(a)} - p_{ik}^{(b)})^{-1}
//        * prod_{(k,b) in row i+1}         (p_{ij}^{(a)} - p_{i+1,k}^{(b)})
//      when target = source - delta_{ij}^{(a)}; 0 otherwise.
//   f: -hbar^{-1} (p_{ij}^{(a)} + (1-i) hbar)^{s-1}
//        * prod_{(k,b) in row i, != (j,a)} (p_{ij}^{(a)} - p_{ik}^{(b)})^{-1}
//        * prod_{(k,b) in row i-1}         (p_{ij}^{(a)} - p_{i-1,k}^{(b)})
//      when target = source + delta_{ij}^{(a)}; 0 otherwise.
// ---------------------------------------------------------------------------
Rat e_coeff(const Composition& pi, const GTPattern& source, const GTPattern& target, int i, int s,
            const SpecEnv& env);
Rat f_coeff(const Composition& pi, const GTPattern& source, const GTPattern& target, int i, int s,
            const SpecEnv& env);

// Diagonal eigenvalue of A_i(u): the monic polynomial
//   prod_{j<=i} prod_{a<=p_j} (u - hbar^{-1} p_{ij}^{(a)}),  A_0 = 1.
UPoly A_eigenvalue(const Composition& pi, int i, const GTPattern& pat, const SpecEnv& env);

// Diagonal eigenvalue series of d_k(u) = u^{-p_k} A_k(u+k-1) / A_{k-1}(u+k-1),
// a power series in u^{-1} with constant term 1, truncated at `order`.
USeries d_series(const Composition& pi, int k, const GTPattern& pat, const SpecEnv& env, int order);

// Generator values behind the series: the superscripted generators satisfy
// d_k(u) = 1 + sum_s d_k^{(s)} hbar^{-s+1} u^{-s}, so
//   d_k^{(s)} eigenvalue = hbar^{s-1} * [u^{-s}] d_series,
// and d'_k^{(s)} is the same extraction from the inverse series.
Rat d_generator_value(const Composition& pi, int k, int s, const GTPattern& pat, const SpecEnv& env);
Rat d_prime_generator_value(const Composition& pi, int k, int s, const GTPattern& pat,
                            const SpecEnv& env);

// Default u^{-1} truncation order: degree_cap * max(p_i) + N + 2.
int default_series_order(const Composition& pi, int degree_cap);

// Monic lambda_{rk}(u) = prod_a (u + lambda_{rk}^{(a)}) with
// lambda_{rk}^{(a)} = -hbar^{-1} p_{rk}^{(a)} + k - 1 (rows r <= n uniformly).
UPoly lambda_poly(const GTPattern& pat, int r, int k, const SpecEnv& env);

// ---------------------------------------------------------------------------
// B_i(u) = (u-i+1)^{p_{i+1}-p_i} A_i(u) e_i(u-i+1) and
// C_i(u) = f_i(u-i+1) A_i(u), assembled from truncated generating series.
// Acting on one source pattern they produce, per reachable target, a
// polynomial of degree p_1+...+p_i - 1 (the negative tail cancels; this is
// asserted).  B is e-built and lowers d_i; C is f-built and raises it.
// ---------------------------------------------------------------------------
std::map<GTPattern, UPoly> B_series(const Composition& pi, int i, const GTPattern& source,
                                    const SpecEnv& env);
std::map<GTPattern, UPoly> C_series(const Composition& pi, int i, const GTPattern& source,
                                    const SpecEnv& env);

// The same polynomials reconstructed by Lagrange interpolation through the
// p_1+...+p_i nodes hbar^{-1} p_{ij}^{(a)} from the closed point values
//   B_i(hbar^{-1}p_{ij}^{(a)}) xi ~ -lambda_{i+1,1}(v) ... lambda_{i+1,i+1}(v-i)
//   C_i(hbar^{-1}p_{ij}^{(a)}) xi ~  lambda_{i-1,1}(v) ... lambda_{i-1,i-1}(v-i+2)
// (values dressed into the geometric normalization).  Throws on coincident
// nodes, which signals a non-generic specialization.
struct BCPolys {
  std::map<GTPattern, UPoly> B;
  std::map<GTPattern, UPoly> C;
};
BCPolys interpolate_BC(const Composition& pi, int i, const GTPattern& source, const SpecEnv& env);

// ---------------------------------------------------------------------------
// Weight vectors and generator application
// ---------------------------------------------------------------------------
struct WeightVector {
  Composition pi;
  DegreeVector degree;
  std::map<GTPattern, Rat> coeffs;  // no explicit zeros

  WeightVector() = default;
  WeightVector(const Composition& comp, DegreeVector d) : pi(comp), degree(std::move(d)) {}

  void set(const GTPattern& pat, const Rat& v) {
    if (v == 0)
      coeffs.erase(pat);
    else
      coeffs[pat] = v;
  }
  Rat at(const GTPattern& pat) const {
    auto it = coeffs.find(pat);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const WeightVector& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

WeightVector operator+(const WeightVector& a, const WeightVector& b);
WeightVector operator*(const Rat& s, const WeightVector& a);

struct GenLabel {
  char kind;  // 'e', 'f', 'd'
  int i;
  int s;
};

// Sparse matrix-vector product; the output degree is shifted by -delta_i for
// e and +delta_i for f.  A shift into negative degree yields the zero vector
// of that (empty) weight space.
WeightVector apply_generator(const GenLabel& op, const WeightVector& v, const SpecEnv& env);

// Scale factor of the basis change [pattern] -> Psi factor * xi_pattern.
Rat psi_factor(const Composition& pi, const DegreeVector& degree, const SpecEnv& env);

// Rescales coefficients by the Psi factor (geometric -> fmo) or its inverse.
WeightVector to_fmo(const WeightVector& v, Normalization target, const SpecEnv& env);

// ---------------------------------------------------------------------------
// Cached module context: weight spaces and generator matrices for one
// (composition, specialization, normalization).  Columns are indexed by the
// source basis, entries map target index -> coefficient.
// ---------------------------------------------------------------------------
struct SparseOp {
  DegreeVector src_degree, dst_degree;
  int src_dim = 0, dst_dim = 0;
  std::vector<std::map<int, Rat>> cols;

  bool is_zero() const {
    for (const auto& col : cols)
      if (!col.empty()) return false;
    return true;
  }
  bool operator==(const SparseOp& o) const { return cols == o.cols; }
};

SparseOp compose(const SparseOp& after, const SparseOp& first);
SparseOp operator+(const SparseOp& a, const SparseOp& b);
SparseOp operator-(const SparseOp& a, const SparseOp& b);
SparseOp operator*(const Rat& s, const SparseOp& a);

class GTModule {
 public:
  GTModule(Composition pi, SpecEnv env, Normalization norm = Normalization::geometric)
      : pi_(std::move(pi)), env_(std::move(env)), norm_(norm) {}

  const Composition& pi() const { return pi_; }
  const SpecEnv& env() const { return env_; }
  Normalization normalization() const { return norm_; }

  const PatternSpace& space(const DegreeVector& d);

  // kind 'e' or 'f'; the degree argument is the source degree.
  const SparseOp& generator(char kind, int i, int s, const DegreeVector& src);

  // diagonal operators on the weight space of degree d
  SparseOp diagonal_d(int k, int r, const DegreeVector& d);
  SparseOp diagonal_d_prime(int k, int r, const DegreeVector& d);
  // hbar^{m-1} [u^{-m}] ( d_i(u)^{-1} d_{i+1}(u) ), the diagonal operator on
  // the right side of the e/f commutation relation
  SparseOp diagonal_ef_rhs(int i, int m, const DegreeVector& d);

  SparseOp zero_op(const DegreeVector& src, const DegreeVector& dst);

  Rat d_value(int k, int r, const GTPattern& pat);
  Rat d_prime_value(int k, int r, const GTPattern& pat);

 private:
  const USeries& sigma(int k, const GTPattern& pat, int order);
  const USeries& sigma_inv(int k, const GTPattern& pat, int order);

  Composition pi_;
  SpecEnv env_;
  Normalization norm_;
  std::map<DegreeVector, PatternSpace> spaces_;
  std::map<std::tuple<char, int, int, DegreeVector>, SparseOp> gens_;
  std::map<std::pair<std::vector<int>, int>, USeries> sigma_, sigma_inv_;
};

}  // namespace zastava
