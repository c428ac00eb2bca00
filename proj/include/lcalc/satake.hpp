#pragma once

#include <string>
#include <vector>

#include "factored.hpp"

namespace lcalc {

// L-function argument mu*s + nu, stored with 2*nu so half-integer shifts
// stay integral.  Contributes the monomial X^mu * T^(2*nu).
struct ArgForm {
  int mu = 0;
  int two_nu = 0;

  ArgForm() = default;
  ArgForm(int mu_, int two_nu_) : mu(mu_), two_nu(two_nu_) {
    if (mu < 0) throw std::invalid_argument("ArgForm needs mu >= 0");
  }

  Monomial monomial() const {
    Monomial m = Monomial::one();
    if (mu != 0) m.exps[VarId::x()] = mu;
    if (two_nu != 0) m.exps[VarId::t()] = two_nu;
    return m;
  }
};

enum class GroupKind { GL, Sp, SO };

inline std::string to_string(GroupKind g) {
  switch (g) {
    case GroupKind::GL: return "GL";
    case GroupKind::Sp: return "Sp";
    default: return "SO";
  }
}

// A group in the family GL_n, Sp_{2n} or (split even) SO_{2n}, carrying the
// rank parameter n.  The dual-side standard representation has dimension
// N = n, 2n+1, 2n respectively, and the doubling Eisenstein argument scale
// is alpha = kn, 2kn+1, 2kn-1.
struct GroupData {
  GroupKind kind = GroupKind::GL;
  int n = 1;

  GroupData() = default;
  GroupData(GroupKind kind_, int n_) : kind(kind_), n(n_) {
    if (n < 1) throw std::invalid_argument("group rank must be positive");
  }

  int N() const {
    switch (kind) {
      case GroupKind::Sp: return 2 * n + 1;
      case GroupKind::SO: return 2 * n;
      default: return n;
    }
  }

  int alpha(int k) const {
    switch (kind) {
      case GroupKind::Sp: return 2 * k * n + 1;
      case GroupKind::SO: return 2 * k * n - 1;
      default: return k * n;
    }
  }
};

// Multiset of Satake parameters: nonzero pure monomials (symbols, exact
// rationals, or symbols times powers of X/T).
class SatakeSet {
 public:
  SatakeSet() = default;
  explicit SatakeSet(std::vector<Monomial> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty())
      throw std::invalid_argument("empty Satake parameter set");
    for (const auto& m : entries_)
      if (m.is_zero())
        throw std::invalid_argument("zero Satake parameter");
  }

  // {prefix1, ..., prefixK} as fresh symbols.
  static SatakeSet symbols(const std::string& prefix, int k) {
    if (k < 1) throw std::invalid_argument("need at least one parameter");
    std::vector<Monomial> es;
    es.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
      es.push_back(Monomial::var(VarId::param(prefix + std::to_string(i))));
    return SatakeSet(std::move(es));
  }

  static SatakeSet values(const std::vector<Rational>& vals) {
    std::vector<Monomial> es;
    es.reserve(vals.size());
    for (const auto& v : vals) es.push_back(Monomial(v));
    return SatakeSet(std::move(es));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const Monomial& entry(int i) const {
    return entries_.at(static_cast<std::size_t>(i));
  }
  const std::vector<Monomial>& entries() const { return entries_; }

  // Entry-wise inverse: the contragredient on unramified parameters.
  SatakeSet inverse() const {
    std::vector<Monomial> es;
    es.reserve(entries_.size());
    for (const auto& m : entries_) es.push_back(m.inverse());
    return SatakeSet(std::move(es));
  }

  SatakeSet substituted(const std::map<VarId, Monomial>& sub) const {
    std::vector<Monomial> es;
    es.reserve(entries_.size());
    for (const auto& m : entries_) {
      Monomial s = m.substituted(sub);
      if (s.is_zero())
        throw PoleAtPoint("Satake parameter vanishes under substitution");
      es.push_back(std::move(s));
    }
    return SatakeSet(std::move(es));
  }

  SatakeSet concat(const SatakeSet& o) const {
    std::vector<Monomial> es = entries_;
    es.insert(es.end(), o.entries_.begin(), o.entries_.end());
    return SatakeSet(std::move(es));
  }

  Monomial product() const {
    Monomial m = Monomial::one();
    for (const auto& e : entries_) m *= e;
    return m;
  }

  bool all_numeric() const {
    for (const auto& m : entries_)
      if (!m.is_constant()) return false;
    return true;
  }

  std::vector<Monomial> sorted_entries() const {
    std::vector<Monomial> es = entries_;
    std::sort(es.begin(), es.end(), mono_less);
    return es;
  }
  friend bool multiset_equal(const SatakeSet& a, const SatakeSet& b) {
    return a.sorted_entries() == b.sorted_entries();
  }

 private:
  std::vector<Monomial> entries_;
};

// --------------------------------------------------------------------------
// L-factor constructors.  An L-factor is a product of (1 - M)^-1 over pure
// monomials M; "scale" is the rendered argument monomial X^mu T^(2 nu).

// det(1 - A otimes B * scale)^-1 over all ordered pairs of entries.
inline FactoredLFunction l_rankin_selberg(const SatakeSet& A,
                                          const SatakeSet& B,
                                          const Monomial& scale) {
  FactoredLFunction f;
  for (const auto& a : A.entries())
    for (const auto& b : B.entries()) f.mul_factor(a * b * scale, -1);
  return f;
}
inline FactoredLFunction l_rankin_selberg(const SatakeSet& A,
                                          const SatakeSet& B,
                                          const ArgForm& arg) {
  return l_rankin_selberg(A, B, arg.monomial());
}

inline FactoredLFunction l_standard(const SatakeSet& A, const Monomial& scale) {
  FactoredLFunction f;
  for (const auto& a : A.entries()) f.mul_factor(a * scale, -1);
  return f;
}
inline FactoredLFunction l_standard(const SatakeSet& A, const ArgForm& arg) {
  return l_standard(A, arg.monomial());
}

// Symmetric square: unordered pairs i <= j.
inline FactoredLFunction l_sym2(const SatakeSet& A, const Monomial& scale) {
  FactoredLFunction f;
  for (int i = 0; i < A.size(); ++i)
    for (int j = i; j < A.size(); ++j)
      f.mul_factor(A.entry(i) * A.entry(j) * scale, -1);
  return f;
}
inline FactoredLFunction l_sym2(const SatakeSet& A, const ArgForm& arg) {
  return l_sym2(A, arg.monomial());
}

// Exterior square: strict pairs i < j; empty (= 1) in rank one.
inline FactoredLFunction l_wedge2(const SatakeSet& A, const Monomial& scale) {
  FactoredLFunction f;
  for (int i = 0; i < A.size(); ++i)
    for (int j = i + 1; j < A.size(); ++j)
      f.mul_factor(A.entry(i) * A.entry(j) * scale, -1);
  return f;
}
inline FactoredLFunction l_wedge2(const SatakeSet& A, const ArgForm& arg) {
  return l_wedge2(A, arg.monomial());
}

// Standard-representation parameters of the dual-group embedding into GL_N:
// Sp_{2n} contributes {a_i} u {1} u {a_i^-1}, SO_{2n} just {a_i} u {a_i^-1}.
inline SatakeSet lift_to_gl(const GroupData& group, const SatakeSet& pi) {
  if (group.kind == GroupKind::GL)
    throw std::invalid_argument("lift_to_gl expects Sp or SO");
  if (pi.size() != group.n)
    throw std::invalid_argument("parameter set size must equal the rank");
  std::vector<Monomial> es = pi.entries();
  if (group.kind == GroupKind::Sp) es.push_back(Monomial::one());
  for (int i = pi.size() - 1; i >= 0; --i) es.push_back(pi.entry(i).inverse());
  return SatakeSet(std::move(es));
}

// L(arg, lift(pi) x tau) factors as [L(arg, tau)] (Sp only) times
// L(arg, pi x tau) L(arg, pi^-1 x tau).
inline bool siegel_factorization_check(const GroupData& group,
                                       const SatakeSet& piN,
                                       const SatakeSet& tau,
                                       const ArgForm& arg) {
  FactoredLFunction lhs = l_rankin_selberg(lift_to_gl(group, piN), tau, arg);
  FactoredLFunction rhs = l_rankin_selberg(piN, tau, arg) *
                          l_rankin_selberg(piN.inverse(), tau, arg);
  if (group.kind == GroupKind::Sp) rhs *= l_standard(tau, arg);
  return rf_equal(lhs, rhs);
}

// Unramified gamma-factor of the functional equation at argument ks + 1/2:
//
//   gamma = L(-ks + 1/2, pi x tau^vee) / L(ks + 1/2, pi^-1 x tau)
//
// for the rank-one pi with parameter p; epsilon = 1 in the unramified
// normalization.  The numerator legitimately carries X^-k monomials.
inline FactoredLFunction gamma_unramified(const VarId& p, const SatakeSet& tau,
                                          int k) {
  if (!p.is_param())
    throw std::invalid_argument("gamma parameter must be a Param variable");
  Monomial pm = Monomial::var(p);
  Monomial num_scale = Monomial::var(VarId::x(), -k) * Monomial::var(VarId::t());
  Monomial den_scale = Monomial::var(VarId::x(), k) * Monomial::var(VarId::t());
  FactoredLFunction f;
  for (const auto& x : tau.entries()) {
    f.mul_factor(pm * x.inverse() * num_scale, -1);     // numerator L
    f.mul_factor(pm.inverse() * x * den_scale, +1);     // denominator L
  }
  return f;
}

// Sufficient unitarity margin: |chi_i / chi_j| < q for all i != j.
inline bool unitary_regularity_check(const std::vector<Rational>& values,
                                     const Rational& q) {
  if (q <= 1) throw std::invalid_argument("q must exceed 1");
  for (const auto& v : values)
    if (v == 0) throw std::invalid_argument("parameters must be nonzero");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i == j) continue;
      if (abs(values[i] / values[j]) >= q) return false;
    }
  return true;
}

}  // namespace lcalc
