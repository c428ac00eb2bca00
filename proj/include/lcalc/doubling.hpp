#pragma once

#include <optional>

#include "symmfunc.hpp"

namespace lcalc {

// Closed form of an unramified doubling zeta value.  All L-arguments are
// built directly in the "alpha*s" lattice: the value's X-exponents are the
// effective multiplier (k*n for the GL form, the group's alpha for the
// classical form) times the displayed argument steps.  Substitutions like
// s -> alpha*s/(k*a) are realized by constructing with the right multiplier,
// never by dividing exponents.
struct ZetaClosedForm {
  GroupData group;
  int n = 0;
  int k = 0;
  FactoredLFunction value;
};

namespace detail {

inline void require_rank_match(const GroupData& group, int n) {
  if (group.n != n)
    throw std::invalid_argument("group rank disagrees with n argument");
}

inline void require_classical(const GroupData& group) {
  if (group.kind == GroupKind::GL)
    throw std::invalid_argument("operation expects Sp or SO");
}

// The GL-layer compatibility constraint on central characters, checkable
// only when every parameter is numeric.
inline void check_central_characters(const SatakeSet& tau,
                                     const SatakeSet& tauPrime) {
  if (!tau.all_numeric() || !tauPrime.all_numeric()) return;
  if (!(tau.product() * tauPrime.product()).is_one())
    throw std::invalid_argument(
        "central characters are incompatible: product of all tau and tau' "
        "parameters must be 1");
}

}  // namespace detail

// d_{tau,tau',a,b}(s) = prod_{1<=j<=b} L(2as+j, tau x tau'^vee)
//                                    / L(2as+a+j, tau x tau'^vee),
// the proportionality factor of the GL_{a+b} -> GL_a x GL_b reduction,
// constructed in the alpha*s lattice.
inline FactoredLFunction d_gl_reduction(int a, int b, int k,
                                        const SatakeSet& tau,
                                        const SatakeSet& tauPrime, int alpha) {
  if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
  if (k < 1) throw std::invalid_argument("k must be positive");
  SatakeSet dual = tauPrime.inverse();
  FactoredLFunction f;
  for (int j = 1; j <= b; ++j) {
    f *= l_rankin_selberg(tau, dual, ArgForm(2 * alpha, 2 * j));
    f *= l_rankin_selberg(tau, dual, ArgForm(2 * alpha, 2 * (a + j))).inverse();
  }
  return f;
}

// Z for GL_n x GL_k:
//   L(kns+1/2, pi^vee x tau) L(kns+1/2, pi x tau'^vee)
//     / prod_{j=1}^n L(2kns+j, tau x tau'^vee)
// smul overrides the s-multiplier kn when the value is needed in a larger
// argument lattice (smul = alpha inside the classical reduction).
inline ZetaClosedForm z_gl_closed(int n, int k, const SatakeSet& piParams,
                                  const SatakeSet& tau,
                                  const SatakeSet& tauPrime, int smul = 0) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  if (piParams.size() != n)
    throw std::invalid_argument("pi must have n parameters");
  detail::check_central_characters(tau, tauPrime);
  int A = smul > 0 ? smul : k * n;
  SatakeSet dual = tauPrime.inverse();
  FactoredLFunction f;
  f *= l_rankin_selberg(piParams.inverse(), tau, ArgForm(A, 1));
  f *= l_rankin_selberg(piParams, dual, ArgForm(A, 1));
  for (int j = 1; j <= n; ++j)
    f *= l_rankin_selberg(tau, dual, ArgForm(2 * A, 2 * j)).inverse();
  return {GroupData(GroupKind::GL, n), n, k, std::move(f)};
}

// Z_n = d_{a,b} * Z_a * Z_b with all three constructed in the kn*s lattice.
inline bool verify_gl_reduction(int n, int a, int b, int k,
                                const SatakeSet& piA, const SatakeSet& piB,
                                const SatakeSet& tau,
                                const SatakeSet& tauPrime) {
  if (a + b != n) throw std::invalid_argument("split must satisfy a + b = n");
  if (piA.size() != a || piB.size() != b)
    throw std::invalid_argument("pi blocks must have sizes a and b");
  int alpha = k * n;
  FactoredLFunction lhs =
      z_gl_closed(n, k, piA.concat(piB), tau, tauPrime).value;
  FactoredLFunction rhs = d_gl_reduction(a, b, k, tau, tauPrime, alpha) *
                          z_gl_closed(a, k, piA, tau, tauPrime, alpha).value *
                          z_gl_closed(b, k, piB, tau, tauPrime, alpha).value;
  return rf_equal(lhs, rhs);
}

// Raw standard-representation part of the Gindikin-Karpelevich product:
// prod_{i<=k} prod_{j<=n} L(alpha s+j-1/2, chi_i) / L(alpha s+j+1/2, chi_i).
inline FactoredLFunction gk_standard_raw(int n, const SatakeSet& tau,
                                         int alpha) {
  FactoredLFunction f;
  for (int j = 1; j <= n; ++j) {
    f *= l_standard(tau, ArgForm(alpha, 2 * j - 1));
    f *= l_standard(tau, ArgForm(alpha, 2 * j + 1)).inverse();
  }
  return f;
}

// Its telescoped value L(alpha s+1/2, tau) / L(alpha s+n+1/2, tau).
inline FactoredLFunction gk_standard_closed(int n, const SatakeSet& tau,
                                            int alpha) {
  return l_standard(tau, ArgForm(alpha, 1)) *
         l_standard(tau, ArgForm(alpha, 2 * n + 1)).inverse();
}

// The intertwining proportionality factor d_tau(s) in closed form:
//   [L(as+1/2,tau)/L(as+n+1/2,tau)]   (Sp only)
//   * prod_{j<=floor(n/2)} L(2as+2j,Sym^2) / L(2as+2j+2n-2*floor(n/2)-1,Sym^2)
//   * prod_{j<=ceil(n/2)}  L(2as+2j-1,wedge^2) / L(2as+2j+2n-2*ceil(n/2),wedge^2)
// with a = alpha = 2kn+1 (Sp) or 2kn-1 (SO).
inline FactoredLFunction d_tau_closed(const GroupData& group, int n, int k,
                                      const SatakeSet& tau) {
  detail::require_classical(group);
  detail::require_rank_match(group, n);
  int alpha = group.alpha(k);
  FactoredLFunction f;
  if (group.kind == GroupKind::Sp) f *= gk_standard_closed(n, tau, alpha);
  int half_lo = n / 2, half_hi = (n + 1) / 2;
  for (int j = 1; j <= half_lo; ++j) {
    f *= l_sym2(tau, ArgForm(2 * alpha, 2 * (2 * j)));
    f *= l_sym2(tau, ArgForm(2 * alpha, 2 * (2 * j + 2 * n - 2 * half_lo - 1)))
             .inverse();
  }
  for (int j = 1; j <= half_hi; ++j) {
    f *= l_wedge2(tau, ArgForm(2 * alpha, 2 * (2 * j - 1)));
    f *= l_wedge2(tau, ArgForm(2 * alpha, 2 * (2 * j + 2 * n - 2 * half_hi)))
             .inverse();
  }
  return f;
}

// The same constant as the raw rank-one product over the relevant roots,
// before any telescoping:
//   (Sp only) the standard part gk_standard_raw;
//   for each unordered pair i < i':  prod_{j,j'<=n}
//       L(2as+j+j'-1, chi_i chi_i') / L(2as+j+j', chi_i chi_i');
//   for each i:  prod_{j1<j2<=n}
//       L(2as+j1+j2-1, chi_i^2) / L(2as+j1+j2, chi_i^2).
inline FactoredLFunction d_tau_gk(const GroupData& group, int n, int k,
                                  const SatakeSet& tau) {
  detail::require_classical(group);
  detail::require_rank_match(group, n);
  int alpha = group.alpha(k);
  FactoredLFunction f;
  if (group.kind == GroupKind::Sp) f *= gk_standard_raw(n, tau, alpha);
  auto quotient = [&](const Monomial& chi, int c) {
    // L(2 alpha s + c - 1, chi) / L(2 alpha s + c, chi)
    f.mul_factor(chi * ArgForm(2 * alpha, 2 * (c - 1)).monomial(), -1);
    f.mul_factor(chi * ArgForm(2 * alpha, 2 * c).monomial(), +1);
  };
  for (int i = 0; i < tau.size(); ++i)
    for (int i2 = i + 1; i2 < tau.size(); ++i2)
      for (int j = 1; j <= n; ++j)
        for (int j2 = 1; j2 <= n; ++j2)
          quotient(tau.entry(i) * tau.entry(i2), j + j2);
  for (int i = 0; i < tau.size(); ++i)
    for (int j1 = 1; j1 <= n; ++j1)
      for (int j2 = j1 + 1; j2 <= n; ++j2)
        quotient(tau.entry(i) * tau.entry(i), j1 + j2);
  return f;
}

// Z for G x GL_k with G = Sp_{2n} or SO_{2n}:
//   L(as+1/2, pi x tau)
//     / ( [L(as+n+1/2, tau)]  (Sp only)
//         * prod_{j=1}^n L(2as+2j, tau, wedge^2) L(2as+2j-1, tau, Sym^2) )
// where pi's GL_N parameters are lift_to_gl(group, piParams).
inline ZetaClosedForm z_classical_closed(const GroupData& group, int n, int k,
                                         const SatakeSet& piParams,
                                         const SatakeSet& tau) {
  detail::require_classical(group);
  detail::require_rank_match(group, n);
  if (k < 1) throw std::invalid_argument("k must be positive");
  int alpha = group.alpha(k);
  FactoredLFunction f =
      l_rankin_selberg(lift_to_gl(group, piParams), tau, ArgForm(alpha, 1));
  if (group.kind == GroupKind::Sp)
    f *= l_standard(tau, ArgForm(alpha, 2 * n + 1)).inverse();
  for (int j = 1; j <= n; ++j) {
    f *= l_wedge2(tau, ArgForm(2 * alpha, 4 * j)).inverse();
    f *= l_sym2(tau, ArgForm(2 * alpha, 4 * j - 2)).inverse();
  }
  return {group, n, k, std::move(f)};
}

// Z_G = d_tau * Z_GL with the GL value taken at tau' = tau^vee in the
// alpha*s lattice; this combines the Siegel factorization with the
// Sym^2 x wedge^2 splitting of tau x tau.
inline bool verify_classical_reduction(const GroupData& group, int n, int k,
                                       const SatakeSet& piN,
                                       const SatakeSet& tau) {
  detail::require_classical(group);
  FactoredLFunction lhs = z_classical_closed(group, n, k, piN, tau).value;
  FactoredLFunction rhs =
      d_tau_closed(group, n, k, tau) *
      z_gl_closed(n, k, piN, tau, tau.inverse(), group.alpha(k)).value;
  return rf_equal(lhs, rhs);
}

// Psi(zeta, s) = L(-zeta-ks+1/2, pi x tau^vee) L(-zeta+ks+1/2, pi x tau'^vee)
//                  / L(2ks+1, tau x tau'^vee)
// for the rank-one pi with parameter p.  zeta, when present, is carried by
// a dedicated variable Z = q^(-zeta); omitting it is the zeta = 0 value.
inline FactoredLFunction psi_closed(int k, const VarId& p, const SatakeSet& tau,
                                    const SatakeSet& tauPrime,
                                    std::optional<VarId> zeta = std::nullopt) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!p.is_param())
    throw std::invalid_argument("pi parameter must be a Param variable");
  if (tau.size() != k || tauPrime.size() != k)
    throw std::invalid_argument("tau and tau' must have size k");
  Monomial pm = Monomial::var(p);
  Monomial zinv = Monomial::one();
  if (zeta) {
    if (!zeta->is_param())
      throw std::invalid_argument("zeta must be a Param variable");
    zinv = Monomial::var(*zeta, -1);
  }
  Monomial t = Monomial::var(VarId::t());
  FactoredLFunction f;
  for (const auto& x : tau.entries())
    f.mul_factor(pm * x.inverse() * zinv * Monomial::var(VarId::x(), -k) * t,
                 -1);
  for (const auto& y : tauPrime.entries())
    f.mul_factor(pm * y.inverse() * zinv * Monomial::var(VarId::x(), k) * t,
                 -1);
  SatakeSet dual = tauPrime.inverse();
  f *= l_rankin_selberg(tau, dual, ArgForm(2 * k, 2)).inverse();
  return f;
}

// Independent series route to Psi(0, s): the unramified torus sum
//   L(2ks+1, tau x tau'^vee)^-1 * sum_{m>=0} p^m T^m h_m(induced_params)
// graded by p and truncated at degree D, compared against the p-expansion
// of the closed form.
inline bool psi_series_check(int k, const VarId& p, const SatakeSet& tau,
                             const SatakeSet& tauPrime, int D) {
  if (D < 0) throw std::invalid_argument("negative truncation bound");
  SatakeSet ind = induced_params(tau, tauPrime, k);
  std::vector<Poly> h = complete_homogeneous_table(D, ind);
  Poly sum;
  Monomial pt = Monomial::var(p) * Monomial::var(VarId::t());
  Monomial pw = Monomial::one();
  for (int m = 0; m <= D; ++m) {
    Poly t = h[static_cast<std::size_t>(m)];
    t.mul_monomial(pw);
    sum += t;
    pw *= pt;
  }
  // 1/L(2ks+1, tau x tau'^vee) is the polynomial prod (1 - x_i x'_j^-1 X^2k T^2).
  Poly norm{Rational(1)};
  Monomial scale = ArgForm(2 * k, 2).monomial();
  for (const auto& x : tau.entries())
    for (const auto& y : tauPrime.entries())
      norm *= Poly(Rational(1)) - Poly(x * y.inverse() * scale);
  sum *= norm;
  TruncatedSeries lhs = TruncatedSeries::from_poly(sum, p, D);
  TruncatedSeries rhs =
      series_expand(psi_closed(k, p, tau, tauPrime), p, D);
  return lhs == rhs;
}

// The rank-one consistency gamma * Z = Psi(0, s) tying together the
// gamma-factor, the n = 1 closed form and the series value.
inline bool verify_prop_gl1(int k, const VarId& p, const SatakeSet& tau,
                            const SatakeSet& tauPrime) {
  FactoredLFunction gamma = gamma_unramified(p, tau, k);
  SatakeSet pi(std::vector<Monomial>{Monomial::var(p)});
  FactoredLFunction z = z_gl_closed(1, k, pi, tau, tauPrime).value;
  FactoredLFunction psi = psi_closed(k, p, tau, tauPrime);
  return rf_equal(gamma * z, psi);
}

}  // namespace lcalc
