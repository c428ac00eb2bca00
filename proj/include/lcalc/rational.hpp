#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lcalc {

// Exact rational coefficients.  All arithmetic in the library is exact;
// there is no floating-point fallback anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b" (optionally signed).  mpq_class's string constructor
// does not reduce, so canonicalize explicitly.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  mpz_class num = base.get_num(), den = base.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
  }
  mpz_class rn, rd;
  mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rational r(rn, rd);
  r.canonicalize();  // sign may sit in the denominator after the swap
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lcalc
