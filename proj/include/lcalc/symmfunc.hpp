#pragma once

#include <vector>

#include "satake.hpp"

namespace lcalc {

// Weakly decreasing integer vector (entries may be negative).
struct DominantWeight {
  std::vector<int> parts;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i - 1] < parts[i])
        throw std::invalid_argument("weight is not weakly decreasing");
  }
};

inline bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

// h_0, h_1, ..., h_maxDeg of the entries, by the one-variable-at-a-time
// recurrence h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j h_{m-1}(x_1..x_j).
inline std::vector<Poly> complete_homogeneous_table(int maxDeg,
                                                    const SatakeSet& vars) {
  if (maxDeg < 0) throw std::invalid_argument("negative degree");
  std::vector<Poly> h(static_cast<std::size_t>(maxDeg) + 1);
  h[0] = Poly(Rational(1));
  for (const auto& x : vars.entries())
    for (int m = 1; m <= maxDeg; ++m) {
      Poly t = h[m - 1];
      t.mul_monomial(x);
      h[m] += t;
    }
  return h;
}

// Sum of all degree-m monomials in the entries (with repetition); h_0 = 1.
inline Poly complete_homogeneous(int m, const SatakeSet& vars) {
  return complete_homogeneous_table(m, vars).back();
}

namespace detail {

// det over free columns, expanding along rows; fine for the small
// Jacobi-Trudi matrices that arise here.
inline Poly det_expand(const std::vector<std::vector<Poly>>& a,
                       std::size_t row, unsigned freeCols) {
  std::size_t n = a.size();
  if (row == n) return Poly(Rational(1));
  Poly out;
  int parity = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(freeCols & (1u << j))) continue;
    if (!a[row][j].is_zero()) {
      Poly sub = det_expand(a, row + 1, freeCols & ~(1u << j));
      Poly term = a[row][j] * sub;
      out += (parity % 2 == 0) ? term : -term;
    }
    ++parity;
  }
  return out;
}

}  // namespace detail

// Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
// Requires lambda_k >= 0; use shintani_whittaker for general dominant weights.
inline Poly schur(const DominantWeight& lambda, const SatakeSet& vars) {
  if (!lambda.parts.empty() && lambda.parts.back() < 0)
    throw std::invalid_argument("schur needs a partition (last part >= 0)");
  std::vector<int> lam = lambda.parts;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  std::size_t l = lam.size();
  if (l == 0) return Poly(Rational(1));
  if (l > 31) throw std::invalid_argument("weight has too many parts");
  int maxDeg = lam[0] + static_cast<int>(l) - 1;
  std::vector<Poly> h = complete_homogeneous_table(maxDeg, vars);
  std::vector<std::vector<Poly>> a(l, std::vector<Poly>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      int d = lam[i] - static_cast<int>(i) + static_cast<int>(j);
      a[i][j] = d < 0 ? Poly() : h[static_cast<std::size_t>(d)];
    }
  return detail::det_expand(a, 0, (1u << l) - 1u);
}

// Normalized unramified Whittaker value at the torus point with cocharacter
// lambda (the Shintani / Casselman-Shalika formula):
//
//   W(diag(pi^lambda)) = delta_B^{1/2}(pi^lambda) * s_lambda(parameters)
//
// with delta_B^{1/2} = T^{sum_i lambda_i (k+1-2i)}, zero off the dominant
// cone, and 1 at lambda = 0.  General dominant lambda (negative entries
// allowed) is handled by shifting by the last part.
inline Poly shintani_whittaker(const SatakeSet& tau,
                               const std::vector<int>& lambda) {
  int k = tau.size();
  if (static_cast<int>(lambda.size()) != k)
    throw std::invalid_argument("cocharacter length must equal the rank");
  if (!weakly_decreasing(lambda)) return Poly();
  int tExp = 0;
  for (int i = 0; i < k; ++i) tExp += lambda[i] * (k - 1 - 2 * i);
  int last = lambda.back();
  std::vector<int> shifted(lambda);
  for (auto& p : shifted) p -= last;
  Poly s = schur(DominantWeight(shifted), tau);
  Monomial scale = tau.product().pow(last) * Monomial::var(VarId::t(), tExp);
  s.mul_monomial(scale);
  return s;
}

// Generating identity sum_m h_m(params) scale^m = prod_a (1 - a scale)^-1,
// both sides truncated at degree D in the grading variable.
inline bool rs_series_check(const SatakeSet& params, const Monomial& scale,
                            const VarId& grading, int D) {
  if (scale.exp_of(grading) != 1)
    throw std::invalid_argument(
        "scale must carry the grading variable with exponent 1");
  for (const auto& a : params.entries())
    if (a.exp_of(grading) != 0)
      throw std::invalid_argument(
          "grading variable may not occur in the parameters");
  std::vector<Poly> h = complete_homogeneous_table(D, params);
  Poly sum;
  Monomial pw = Monomial::one();
  for (int m = 0; m <= D; ++m) {
    Poly t = h[static_cast<std::size_t>(m)];
    t.mul_monomial(pw);
    sum += t;
    pw *= scale;
  }
  TruncatedSeries lhs = TruncatedSeries::from_poly(sum, grading, D);
  FactoredLFunction prod;
  for (const auto& a : params.entries()) prod.mul_factor(a * scale, -1);
  return lhs == series_expand(prod, grading, D);
}

// Satake multiset of the dual of the induced representation
// |det|^{ks} tau' (x) |det|^{-ks} tau on GL_{2k}:
// {x'_j^-1 X^k} u {x_i^-1 X^-k}.
inline SatakeSet induced_params(const SatakeSet& tau, const SatakeSet& tauPrime,
                                int k) {
  if (tau.size() != k || tauPrime.size() != k)
    throw std::invalid_argument("both parameter sets must have size k");
  std::vector<Monomial> es;
  es.reserve(static_cast<std::size_t>(2 * k));
  for (const auto& y : tauPrime.entries())
    es.push_back(y.inverse() * Monomial::var(VarId::x(), k));
  for (const auto& x : tau.entries())
    es.push_back(x.inverse() * Monomial::var(VarId::x(), -k));
  return SatakeSet(std::move(es));
}

}  // namespace lcalc
