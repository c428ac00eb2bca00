#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"
#include "variables.hpp"

namespace lcalc {

// Exponent vector of a Laurent monomial; zero exponents are never stored.
using ExpMap = std::map<VarId, int>;

// Thrown when an exact evaluation hits a pole (division by zero after
// substitution).  Callers doing randomized checks catch this and resample.
struct PoleAtPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c * prod v_i^{e_i} with exact rational c and integer (possibly negative)
// exponents.  The zero monomial is coeff 0 with an empty exponent map.
struct Monomial {
  Rational coeff{0};
  ExpMap exps;

  Monomial() = default;
  explicit Monomial(Rational c) : coeff(std::move(c)) {}
  Monomial(Rational c, ExpMap e) : coeff(std::move(c)), exps(std::move(e)) {
    normalize();
  }

  static Monomial one() { return Monomial(Rational(1)); }
  static Monomial var(const VarId& v, int e = 1) {
    Monomial m(Rational(1));
    if (e != 0) m.exps[v] = e;
    return m;
  }

  void normalize() {
    if (coeff == 0) {
      exps.clear();
      return;
    }
    for (auto it = exps.begin(); it != exps.end();)
      it = (it->second == 0) ? exps.erase(it) : std::next(it);
  }

  bool is_zero() const { return coeff == 0; }
  bool is_constant() const { return exps.empty(); }
  bool is_one() const { return exps.empty() && coeff == 1; }

  int exp_of(const VarId& v) const {
    auto it = exps.find(v);
    return it == exps.end() ? 0 : it->second;
  }

  Monomial& operator*=(const Monomial& o) {
    coeff *= o.coeff;
    if (coeff == 0) {
      exps.clear();
      return *this;
    }
    for (const auto& [v, e] : o.exps) {
      int ne = (exps[v] += e);
      if (ne == 0) exps.erase(v);
    }
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  Monomial inverse() const {
    if (is_zero()) throw PoleAtPoint("inverse of zero monomial");
    Monomial m(Rational(1) / coeff);
    for (const auto& [v, e] : exps) m.exps[v] = -e;
    return m;
  }

  Monomial pow(int e) const {
    if (e == 0) return one();
    if (is_zero()) {
      if (e < 0) throw PoleAtPoint("zero monomial to a negative power");
      return Monomial();
    }
    Monomial m(rational_pow(coeff, e));
    for (const auto& [v, ex] : exps) {
      int ne = ex * e;
      if (ne != 0) m.exps[v] = ne;
    }
    return m;
  }

  // Replaces variables by monomials; variables absent from the map survive.
  Monomial substituted(const std::map<VarId, Monomial>& sub) const {
    Monomial out(coeff);
    for (const auto& [v, e] : exps) {
      auto it = sub.find(v);
      if (it == sub.end()) {
        if (e != 0) out.exps[v] += e;
      } else {
        out *= it->second.pow(e);
      }
      if (out.is_zero()) return out;
    }
    out.normalize();
    return out;
  }

  // Total evaluation; every variable of the monomial must be assigned.
  Rational eval(const std::map<VarId, Rational>& point) const {
    Rational out = coeff;
    for (const auto& [v, e] : exps) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("unassigned variable " + v.str());
      if (it->second == 0 && e < 0)
        throw PoleAtPoint("variable " + v.str() + " = 0 raised to " +
                          std::to_string(e));
      out *= rational_pow(it->second, e);
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.exps == b.exps;
  }
};

// Total order used for canonical factor keys and term printing.
inline bool mono_less(const Monomial& a, const Monomial& b) {
  if (a.exps != b.exps) return a.exps < b.exps;
  return a.coeff < b.coeff;
}
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_less(a, b);
  }
};

// Multivariate Laurent polynomial: a finite sum of monomials, stored as a
// canonical map from exponent vector to nonzero coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) {
    if (c != 0) terms_.emplace(ExpMap{}, std::move(c));
  }
  explicit Poly(const Monomial& m) {
    if (!m.is_zero()) terms_.emplace(m.exps, m.coeff);
  }
  static Poly var(const VarId& v, int e = 1) { return Poly(Monomial::var(v, e)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpMap, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExpMap e = ea;
        for (const auto& [v, ex] : eb) {
          int ne = (e[v] += ex);
          if (ne == 0) e.erase(v);
        }
        p.add_term(e, ca * cb);
      }
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& mul_monomial(const Monomial& m) {
    if (m.is_zero()) {
      terms_.clear();
      return *this;
    }
    std::map<ExpMap, Rational> out;
    for (const auto& [e, c] : terms_) {
      ExpMap ne = e;
      for (const auto& [v, ex] : m.exps) {
        int x = (ne[v] += ex);
        if (x == 0) ne.erase(v);
      }
      out.emplace(std::move(ne), c * m.coeff);
    }
    terms_ = std::move(out);
    return *this;
  }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    Poly r{Rational(1)};
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

  // Greatest term in the canonical exponent order; zero for the zero poly.
  Monomial leading_term() const {
    if (terms_.empty()) return Monomial();
    const auto& [e, c] = *terms_.rbegin();
    return Monomial(c, e);
  }

  std::set<VarId> vars() const {
    std::set<VarId> vs;
    for (const auto& [e, c] : terms_)
      for (const auto& [v, ex] : e) vs.insert(v);
    return vs;
  }

  int min_exp(const VarId& v) const {
    bool seen = false;
    int m = 0;
    for (const auto& [e, c] : terms_) {
      auto it = e.find(v);
      int ex = it == e.end() ? 0 : it->second;
      if (!seen || ex < m) m = ex, seen = true;
    }
    return m;
  }
  int max_exp(const VarId& v) const {
    bool seen = false;
    int m = 0;
    for (const auto& [e, c] : terms_) {
      auto it = e.find(v);
      int ex = it == e.end() ? 0 : it->second;
      if (!seen || ex > m) m = ex, seen = true;
    }
    return m;
  }

  // Coefficient of v^e, as a polynomial with v removed.
  Poly coeff_of(const VarId& v, int e) const {
    Poly p;
    for (const auto& [em, c] : terms_) {
      auto it = em.find(v);
      int ex = it == em.end() ? 0 : it->second;
      if (ex != e) continue;
      ExpMap ne = em;
      ne.erase(v);
      p.add_term(ne, c);
    }
    return p;
  }

  Poly substituted(const std::map<VarId, Monomial>& sub) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      Monomial m = Monomial(c, e).substituted(sub);
      if (!m.is_zero()) p.add_term(m.exps, m.coeff);
    }
    return p;
  }

  Rational eval(const std::map<VarId, Rational>& point) const {
    Rational out(0);
    for (const auto& [e, c] : terms_) out += Monomial(c, e).eval(point);
    return out;
  }

 private:
  void add_term(const ExpMap& e, Rational c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<ExpMap, Rational> terms_;
};

}  // namespace lcalc
