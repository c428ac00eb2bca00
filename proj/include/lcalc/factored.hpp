#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "laurent.hpp"
#include "series.hpp"

namespace lcalc {

namespace detail {
inline std::string mono_debug_str(const Monomial& m) {
  std::string s = to_string(m.coeff);
  for (const auto& [v, e] : m.exps)
    s += "*" + v.str() + (e == 1 ? "" : "^" + std::to_string(e));
  return s;
}
}  // namespace detail

// A nonzero rational function kept in factored form
//
//   unit * prod_i (1 - M_i)^{e_i}
//
// with a monomial unit, pure-monomial keys M_i and nonzero integer
// exponents e_i.  Inverse L-factors are the e_i = -1 case.  Keys compare by
// (exponent map, coefficient), so multiplying two products merges equal
// factors and cancels opposite exponents on the spot; a telescoping product
// collapses during construction without any polynomial expansion.
class FactoredLFunction {
 public:
  using FactorMap = std::map<Monomial, int, MonomialLess>;

  FactoredLFunction() : unit_(Monomial::one()) {}
  explicit FactoredLFunction(Monomial unit) : unit_(std::move(unit)) {
    if (unit_.is_zero())
      throw std::invalid_argument("factored function must be nonzero");
  }

  static FactoredLFunction one() { return FactoredLFunction(); }
  // The inverse Euler factor (1 - M)^-1.
  static FactoredLFunction l_factor(const Monomial& M) {
    FactoredLFunction f;
    f.mul_factor(M, -1);
    return f;
  }

  const Monomial& unit() const { return unit_; }
  const FactorMap& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty() && unit_.is_one(); }

  FactoredLFunction& mul_unit(const Monomial& m) {
    if (m.is_zero())
      throw std::invalid_argument("factored function must stay nonzero");
    unit_ *= m;
    return *this;
  }

  FactoredLFunction& mul_factor(const Monomial& M, int e) {
    if (e == 0) return *this;
    if (M.is_zero()) return *this;  // (1 - 0) = 1
    if (M.is_one())
      throw std::invalid_argument("factor (1 - M) vanishes identically");
    auto [it, fresh] = factors_.try_emplace(M, e);
    if (!fresh) {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
    return *this;
  }

  FactoredLFunction& operator*=(const FactoredLFunction& o) {
    unit_ *= o.unit_;
    for (const auto& [M, e] : o.factors_) mul_factor(M, e);
    return *this;
  }
  friend FactoredLFunction operator*(FactoredLFunction a,
                                     const FactoredLFunction& b) {
    return a *= b;
  }

  FactoredLFunction inverse() const {
    FactoredLFunction f(unit_.inverse());
    for (const auto& [M, e] : factors_) f.factors_.emplace(M, -e);
    return f;
  }

  FactoredLFunction pow(int e) const {
    if (e == 0) return one();
    FactoredLFunction f(unit_.pow(e));
    for (const auto& [M, ex] : factors_) f.factors_.emplace(M, ex * e);
    return f;
  }

  FactoredLFunction substituted(const std::map<VarId, Monomial>& sub) const {
    FactoredLFunction f(unit_.substituted(sub));
    for (const auto& [M, e] : factors_) {
      Monomial Ms = M.substituted(sub);
      if (Ms.is_one())
        throw PoleAtPoint("factor (1 - " + detail::mono_debug_str(M) +
                          ") degenerates under substitution");
      f.mul_factor(Ms, e);
    }
    return f;
  }

  std::set<VarId> vars() const {
    std::set<VarId> vs;
    for (const auto& [v, e] : unit_.exps) vs.insert(v);
    for (const auto& [M, e] : factors_)
      for (const auto& [v, ex] : M.exps) vs.insert(v);
    return vs;
  }

  // Expanded (numerator, denominator) pair: unit and positive-exponent
  // factors go to the numerator, negative-exponent factors to the
  // denominator.  Both are honest Laurent polynomials.
  std::pair<Poly, Poly> as_fraction() const {
    Poly num(unit_);
    Poly den(Rational(1));
    for (const auto& [M, e] : factors_) {
      Poly f = Poly(Rational(1)) - Poly(M);
      if (e > 0)
        num *= f.pow(e);
      else
        den *= f.pow(-e);
    }
    return {std::move(num), std::move(den)};
  }

  // Exact value at a total assignment of the variables.
  Rational eval_at(const std::map<VarId, Rational>& point) const {
    Rational out = unit_.eval(point);
    for (const auto& [M, e] : factors_) {
      Rational f = Rational(1) - M.eval(point);
      if (f == 0) {
        if (e < 0)
          throw PoleAtPoint("pole at factor (1 - " +
                            detail::mono_debug_str(M) + ")");
        return Rational(0);
      }
      out *= rational_pow(f, e);
    }
    return out;
  }

 private:
  Monomial unit_;
  FactorMap factors_;
};

struct RfComparison {
  bool equal = false;
  // A term of the difference of the cross-multiplied polynomial forms,
  // present only on failure.
  std::optional<Monomial> witness;
};

// Exact equality of two factored functions as rational functions.  The fast
// path reduces f/g by key merging; if anything survives, the reduced
// quotient is cross-multiplied into polynomials and compared exactly.
inline RfComparison rf_compare(const FactoredLFunction& f,
                               const FactoredLFunction& g) {
  FactoredLFunction h = f * g.inverse();
  if (h.factors().empty() && h.unit().is_one()) return {true, std::nullopt};
  Poly lhs(h.unit());
  Poly rhs{Rational(1)};
  for (const auto& [M, e] : h.factors()) {
    Poly fac = Poly(Rational(1)) - Poly(M);
    if (e > 0)
      lhs *= fac.pow(e);
    else
      rhs *= fac.pow(-e);
  }
  Poly diff = lhs - rhs;
  if (diff.is_zero()) return {true, std::nullopt};
  return {false, diff.leading_term()};
}

inline bool rf_equal(const FactoredLFunction& f, const FactoredLFunction& g) {
  return rf_compare(f, g).equal;
}

// Truncated power-series expansion of f in the grading variable g, exact up
// to and including order D.  Positive-exponent factors must have
// nonnegative grading exponent, negative-exponent (geometric) factors a
// strictly positive one, and the unit a nonnegative one.
inline TruncatedSeries series_expand(const FactoredLFunction& f,
                                     const VarId& g, int D) {
  int ug = f.unit().exp_of(g);
  if (ug < 0)
    throw NotPowerSeries("unit " + detail::mono_debug_str(f.unit()) +
                         " has negative exponent of " + g.str());
  TruncatedSeries out(g, D);
  if (ug <= D) {
    ExpMap rest = f.unit().exps;
    rest.erase(g);
    out.set_coeff(ug, Poly(Monomial(f.unit().coeff, std::move(rest))));
  }
  for (const auto& [M, e] : f.factors()) {
    int mg = M.exp_of(g);
    if (e > 0) {
      if (mg < 0)
        throw NotPowerSeries("factor (1 - " + detail::mono_debug_str(M) +
                             ") has negative exponent of " + g.str());
      Poly fac = Poly(Rational(1)) - Poly(M);
      out *= TruncatedSeries::from_poly(fac, g, D).pow(e);
    } else {
      if (mg <= 0)
        throw NotPowerSeries("geometric factor (1 - " +
                             detail::mono_debug_str(M) +
                             ") needs positive exponent of " + g.str());
      TruncatedSeries geo(g, D);
      Monomial acc = Monomial::one();
      for (int m = 0; m * mg <= D; ++m) {
        ExpMap rest = acc.exps;
        rest.erase(g);
        geo.set_coeff(m * mg, Poly(Monomial(acc.coeff, std::move(rest))));
        acc *= M;
      }
      out *= geo.pow(-e);
    }
  }
  return out;
}

}  // namespace lcalc
