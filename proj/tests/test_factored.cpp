#include <catch2/catch_amalgamated.hpp>

#include "lcalc/factored.hpp"
#include "lcalc/series.hpp"

using namespace lcalc;

namespace {
const Monomial X = Monomial::var(VarId::x());
const Monomial T = Monomial::var(VarId::t());
const Monomial A = Monomial::var(VarId::param("a"));
}  // namespace

TEST_CASE("factor exponents merge by key") {
  FactoredLFunction f;
  f.mul_factor(A * X, 2);
  f.mul_factor(A * X, -1);
  REQUIRE(f.factors().size() == 1);
  REQUIRE(f.factors().begin()->second == 1);

  f.mul_factor(A * X, -1);
  REQUIRE(f.factors().empty());
  REQUIRE(f.is_trivial());

  f.mul_factor(A * X, 0);
  f.mul_factor(Monomial(), 5);
  REQUIRE(f.is_trivial());
}

TEST_CASE("unit handling") {
  FactoredLFunction f{Monomial(rat(3)) * T};
  f.mul_unit(Monomial(rat(1, 6)));
  REQUIRE(f.unit().coeff == rat(1, 2));
  REQUIRE_THROWS_AS(f.mul_unit(Monomial(rat(0))), std::invalid_argument);
  REQUIRE_THROWS_AS(FactoredLFunction{Monomial(rat(0))},
                    std::invalid_argument);
  REQUIRE_THROWS_AS(f.mul_factor(Monomial::one(), 1), std::invalid_argument);
}

TEST_CASE("as_fraction splits numerator and denominator") {
  FactoredLFunction f{Monomial(rat(2))};
  f.mul_factor(A * X, 1);
  f.mul_factor(T * X, -2);
  auto [num, den] = f.as_fraction();
  REQUIRE(num == Poly(Rational(2)) * (Poly(Rational(1)) - Poly(A * X)));
  Poly d = Poly(Rational(1)) - Poly(T * X);
  REQUIRE(den == d * d);
}

TEST_CASE("rf_compare detects equality after cross multiplication") {
  // (1 - X^2) / (1 - X) = 1 + X
  FactoredLFunction lhs;
  lhs.mul_factor(X.pow(2), 1);
  lhs.mul_factor(X, -1);
  FactoredLFunction rhs;
  rhs.mul_factor(Monomial(rat(-1)) * X, 1);
  RfComparison cmp = rf_compare(lhs, rhs);
  REQUIRE(cmp.equal);
  REQUIRE(!cmp.witness.has_value());
}

TEST_CASE("rf_compare reports a witness term on failure") {
  FactoredLFunction lhs = FactoredLFunction::l_factor(A * X);
  FactoredLFunction rhs = FactoredLFunction::l_factor(A.pow(2) * X);
  RfComparison cmp = rf_compare(lhs, rhs);
  REQUIRE(!cmp.equal);
  REQUIRE(cmp.witness.has_value());
  REQUIRE(!cmp.witness->is_zero());

  FactoredLFunction scaled = lhs;
  scaled.mul_unit(Monomial(rat(2)));
  REQUIRE(!rf_equal(lhs, scaled));
  REQUIRE(rf_compare(lhs, scaled).witness.has_value());
}

TEST_CASE("inverse and power") {
  FactoredLFunction f{Monomial(rat(3))};
  f.mul_factor(A * X, 2);
  REQUIRE(rf_equal(f * f.inverse(), FactoredLFunction::one()));
  REQUIRE(rf_equal(f.pow(3), f * f * f));
  REQUIRE(rf_equal(f.pow(-2), (f * f).inverse()));
  REQUIRE(rf_equal(f.pow(0), FactoredLFunction::one()));
}

TEST_CASE("substitution rejects factors degenerating to 1") {
  FactoredLFunction f = FactoredLFunction::l_factor(A * X);
  std::map<VarId, Monomial> kill{{VarId::param("a"),
                                  Monomial::var(VarId::x(), -1)}};
  REQUIRE_THROWS_AS(f.substituted(kill), PoleAtPoint);

  std::map<VarId, Monomial> ok{{VarId::param("a"), Monomial(rat(2))}};
  FactoredLFunction g = f.substituted(ok);
  REQUIRE(g.factors().begin()->first.coeff == rat(2));
}

TEST_CASE("evaluation with poles and zeros") {
  FactoredLFunction f = FactoredLFunction::l_factor(A * X);
  REQUIRE(f.eval_at({{VarId::param("a"), rat(2)}, {VarId::x(), rat(1, 4)}}) ==
          rat(2));
  REQUIRE_THROWS_AS(
      f.eval_at({{VarId::param("a"), rat(2)}, {VarId::x(), rat(1, 2)}}),
      PoleAtPoint);

  FactoredLFunction zero;
  zero.mul_factor(A * X, 1);
  REQUIRE(zero.eval_at({{VarId::param("a"), rat(2)}, {VarId::x(), rat(1, 2)}}) ==
          rat(0));
}

TEST_CASE("series expansion of an Euler factor") {
  TruncatedSeries s =
      series_expand(FactoredLFunction::l_factor(A * X), VarId::x(), 4);
  for (int m = 0; m <= 4; ++m) {
    REQUIRE(s.coeff(m) == Poly(Monomial::var(VarId::param("a"), m)));
  }
}

TEST_CASE("series expansion respects numerator factors and units") {
  FactoredLFunction f{Monomial(rat(2))};
  f.mul_factor(X, 1);
  f.mul_factor(X, -1);
  TruncatedSeries s = series_expand(f, VarId::x(), 6);
  REQUIRE(s.coeff(0) == Poly(Rational(2)));
  for (int m = 1; m <= 6; ++m) REQUIRE(s.coeff(m).is_zero());
}

TEST_CASE("series expansion rejects essential poles at the origin") {
  FactoredLFunction f = FactoredLFunction::l_factor(X.pow(-1));
  REQUIRE_THROWS_AS(series_expand(f, VarId::x(), 3), NotPowerSeries);

  FactoredLFunction g;
  g.mul_factor(A, -1);  // 1/(1 - a) has no X expansion control
  REQUIRE_THROWS_AS(series_expand(g, VarId::x(), 3), NotPowerSeries);

  FactoredLFunction h{X.pow(-2)};
  REQUIRE_THROWS_AS(series_expand(h, VarId::x(), 3), NotPowerSeries);
}

TEST_CASE("truncated series arithmetic") {
  TruncatedSeries a = TruncatedSeries::one(VarId::x(), 3);
  TruncatedSeries b = a * a;
  REQUIRE(a == b);

  Poly p = Poly(Rational(1)) + Poly::var(VarId::x());
  TruncatedSeries s = TruncatedSeries::from_poly(p, VarId::x(), 3);
  TruncatedSeries cube = s.pow(3);
  REQUIRE(cube.coeff(0) == Poly(Rational(1)));
  REQUIRE(cube.coeff(1) == Poly(Rational(3)));
  REQUIRE(cube.coeff(2) == Poly(Rational(3)));
  REQUIRE(cube.coeff(3) == Poly(Rational(1)));

  REQUIRE(first_mismatch(s, s) == -1);
  REQUIRE(first_mismatch(s, a) == 1);
  REQUIRE_THROWS_AS(TruncatedSeries::from_poly(Poly::var(VarId::x(), -1),
                                               VarId::x(), 3),
                    NotPowerSeries);
}
