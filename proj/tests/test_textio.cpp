#include <catch2/catch_amalgamated.hpp>

#include "lcalc/textio.hpp"

using namespace lcalc;

namespace {
const Monomial X = Monomial::var(VarId::x());
const Monomial T = Monomial::var(VarId::t());
const Monomial X1 = Monomial::var(VarId::param("x1"));
const Monomial X2 = Monomial::var(VarId::param("x2"));
}  // namespace

TEST_CASE("monomial rendering order is params, T, X") {
  Monomial m = X.pow(3) * T * X1;
  REQUIRE(to_text(m) == "x1*T*X^3");
  REQUIRE(to_text(Monomial(rat(-3, 2)) * X1.pow(-1)) == "-3/2*x1^-1");
  REQUIRE(to_text(Monomial(rat(1))) == "1");
  REQUIRE(to_text(Monomial()) == "0");
}

TEST_CASE("polynomial rendering") {
  Poly p = Poly(X1) - Poly(X2 * Monomial(rat(2))) + Poly(Rational(1));
  REQUIRE(to_text(p) == "1 + x1 - 2*x2");
  REQUIRE(to_text(Poly()) == "0");
}

TEST_CASE("factored rendering goldens") {
  REQUIRE(to_text(FactoredLFunction::l_factor(X1 * X2 * X)) ==
          "(1 - x1*x2*X)^-1");

  FactoredLFunction f;
  f.mul_factor(X1 * X, 1);
  REQUIRE(to_text(f) == "(1 - x1*X)");

  FactoredLFunction g;
  g.mul_factor(Monomial(rat(-1)) * X, 2);
  REQUIRE(to_text(g) == "(1 + X)^2");

  FactoredLFunction u{Monomial(rat(5)) * T.pow(2)};
  REQUIRE(to_text(u) == "5*T^2");
  u.mul_factor(X, -1);
  REQUIRE(to_text(u) == "5*T^2 * (1 - X)^-1");

  REQUIRE(to_text(FactoredLFunction::one()) == "1");
}

TEST_CASE("series rendering") {
  Poly p = Poly(Rational(1)) + Poly(X1 * X) + Poly(X.pow(3) * Monomial(rat(2)));
  TruncatedSeries s = TruncatedSeries::from_poly(p, VarId::x(), 3);
  REQUIRE(to_text(s) == "1 + x1*X + 2*X^3 + O(X^4)");
}

TEST_CASE("latex rendering uses L-quotient notation") {
  FactoredLFunction f = FactoredLFunction::l_factor(X1 * X * T);
  std::string s = to_latex(f);
  REQUIRE(s.find("\\frac") != std::string::npos);
  REQUIRE(s.find("x_{1}") != std::string::npos);
  REQUIRE(s.find("q^{") != std::string::npos);

  FactoredLFunction g;
  g.mul_factor(X1 * X, 1);
  REQUIRE(to_latex(g).find("\\frac") == std::string::npos);
}

TEST_CASE("parse golden forms") {
  FactoredLFunction f = parse_factored("(1 - x1*x2*X)^-1");
  REQUIRE(to_text(f) == "(1 - x1*x2*X)^-1");

  // tolerated variants: ^1, extra spaces, plus signs, leading unit
  REQUIRE(to_text(parse_factored("(1 - x1*T^1*X^3)^-1")) ==
          "(1 - x1*T*X^3)^-1");
  REQUIRE(to_text(parse_factored("  ( 1-x1 * X ) ^ -2 ")) == "(1 - x1*X)^-2");
  REQUIRE(to_text(parse_factored("(1 + x1*X)")) == "(1 + x1*X)");
  REQUIRE(to_text(parse_factored("3/2 * (1 - X)")) == "3/2 * (1 - X)");
  REQUIRE(to_text(parse_factored("-x1^-1*T")) == "-x1^-1*T");
  REQUIRE(to_text(parse_factored("(2/3)^2 * x1")) == "4/9*x1");
  REQUIRE(to_text(parse_factored("1")) == "1");
}

TEST_CASE("parse merges repeated factors") {
  FactoredLFunction f = parse_factored("(1 - x1*X) * (1 - x1*X)^-1");
  REQUIRE(f.is_trivial());
}

TEST_CASE("parse rejects malformed input with an offset") {
  auto offset_of = [](const std::string& text) {
    try {
      parse_factored(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what()).find("offset") != std::string::npos;
    }
    return false;
  };
  REQUIRE(offset_of(""));
  REQUIRE(offset_of("(2 - X)"));
  REQUIRE(offset_of("(1 - X"));
  REQUIRE(offset_of("x1 *"));
  REQUIRE(offset_of("^2"));
  REQUIRE(offset_of("(1 - )"));
}

TEST_CASE("round trip preserves value and canonical text") {
  std::vector<std::string> forms = {
      "(1 - x1*x2*X)^-1",
      "-2*x1*T^2 * (1 + 3/2*x2*X^2)^-3 * (1 - T*X)",
      "7/3",
      "(1 - x1^-1*T*X^-2)^2",
  };
  for (const auto& text : forms) {
    FactoredLFunction f = parse_factored(text);
    std::string canonical = to_text(f);
    FactoredLFunction g = parse_factored(canonical);
    REQUIRE(rf_equal(f, g));
    REQUIRE(to_text(g) == canonical);
  }
}

TEST_CASE("parse_monomial") {
  Monomial m = parse_monomial("-3/2*x1^-2*T");
  REQUIRE(m.coeff == rat(-3, 2));
  REQUIRE(m.exp_of(VarId::param("x1")) == -2);
  REQUIRE(m.exp_of(VarId::t()) == 1);
  REQUIRE_THROWS_AS(parse_monomial("x1 x2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_monomial(""), std::invalid_argument);
}
