#pragma once

#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace lcalc {

// Thrown when a factored function (or polynomial) is not a power series in
// the chosen grading variable, so truncated expansion is impossible.
struct NotPowerSeries : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power series in one grading variable, truncated at a fixed order.
// coeffs[d] is the coefficient of grading^d and never involves the grading
// variable itself.  Arithmetic silently discards orders above the bound.
class TruncatedSeries {
 public:
  TruncatedSeries(VarId grading, int bound)
      : grading_(std::move(grading)), bound_(check_bound(bound)),
        coeffs_(static_cast<std::size_t>(bound) + 1) {}

  static TruncatedSeries from_poly(const Poly& p, const VarId& g, int bound) {
    TruncatedSeries s(g, bound);
    for (const auto& [e, c] : p.terms()) {
      auto it = e.find(g);
      int d = it == e.end() ? 0 : it->second;
      if (d < 0)
        throw NotPowerSeries("negative power of " + g.str() +
                             " in series conversion");
      if (d > bound) continue;
      ExpMap rest = e;
      rest.erase(g);
      s.coeffs_[d] += Poly(Monomial(c, rest));
    }
    return s;
  }

  static TruncatedSeries one(const VarId& g, int bound) {
    return from_poly(Poly(Rational(1)), g, bound);
  }

  const VarId& grading() const { return grading_; }
  int bound() const { return bound_; }
  const Poly& coeff(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  void set_coeff(int d, Poly p) { coeffs_.at(static_cast<std::size_t>(d)) = std::move(p); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_compatible(o);
    for (int d = 0; d <= bound_; ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_compatible(b);
    TruncatedSeries p(a.grading_, a.bound_);
    for (int i = 0; i <= a.bound_; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.bound_; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return p;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) {
    return *this = *this * o;
  }

  TruncatedSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series power");
    TruncatedSeries r = one(grading_, bound_);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.grading_ == b.grading_ && a.bound_ == b.bound_ &&
           a.coeffs_ == b.coeffs_;
  }

  // First order at which the two series differ, or -1 when equal.
  friend int first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    for (int d = 0; d <= a.bound_; ++d)
      if (!(a.coeffs_[d] == b.coeffs_[d])) return d;
    return -1;
  }

 private:
  static int check_bound(int b) {
    if (b < 0) throw std::invalid_argument("negative truncation bound");
    return b;
  }
  void require_compatible(const TruncatedSeries& o) const {
    if (grading_ != o.grading_ || bound_ != o.bound_)
      throw std::invalid_argument("incompatible truncated series");
  }

  VarId grading_;
  int bound_;
  std::vector<Poly> coeffs_;
};

}  // namespace lcalc
