#include <catch2/catch_amalgamated.hpp>

#include "lcalc/doubling.hpp"
#include "lcalc/textio.hpp"

using namespace lcalc;

namespace {
const VarId P = VarId::param("p");

SatakeSet xs(int k) { return SatakeSet::symbols("x", k); }
SatakeSet ys(int k) { return SatakeSet::symbols("y", k); }
SatakeSet bs(int n) { return SatakeSet::symbols("b", n); }
}  // namespace

TEST_CASE("gl proportionality factor") {
  SatakeSet tau = xs(1), tauPrime = ys(1);
  SatakeSet dual = tauPrime.inverse();

  FactoredLFunction d11 = d_gl_reduction(1, 1, 1, tau, tauPrime, 2);
  FactoredLFunction want11 =
      l_rankin_selberg(tau, dual, ArgForm(4, 2)) *
      l_rankin_selberg(tau, dual, ArgForm(4, 4)).inverse();
  REQUIRE(rf_equal(d11, want11));

  // a = 1 telescopes to a two-term quotient
  SatakeSet tau2 = xs(2), tauPrime2 = ys(2);
  FactoredLFunction d13 = d_gl_reduction(1, 3, 2, tau2, tauPrime2, 8);
  FactoredLFunction want13 =
      l_rankin_selberg(tau2, tauPrime2.inverse(), ArgForm(16, 2)) *
      l_rankin_selberg(tau2, tauPrime2.inverse(), ArgForm(16, 8)).inverse();
  REQUIRE(rf_equal(d13, want13));

  FactoredLFunction d22 = d_gl_reduction(2, 2, 1, tau, tauPrime, 4);
  FactoredLFunction want22 =
      l_rankin_selberg(tau, dual, ArgForm(8, 2)) *
      l_rankin_selberg(tau, dual, ArgForm(8, 4)) *
      l_rankin_selberg(tau, dual, ArgForm(8, 6)).inverse() *
      l_rankin_selberg(tau, dual, ArgForm(8, 8)).inverse();
  REQUIRE(rf_equal(d22, want22));

  REQUIRE_THROWS_AS(d_gl_reduction(0, 1, 1, tau, tauPrime, 2),
                    std::invalid_argument);
}

TEST_CASE("gl closed form factor inventory at rank one") {
  FactoredLFunction z = z_gl_closed(1, 1, bs(1), xs(1), ys(1)).value;
  Monomial T = Monomial::var(VarId::t()), X = Monomial::var(VarId::x());
  Monomial b = Monomial::var(VarId::param("b1"));
  Monomial x = Monomial::var(VarId::param("x1"));
  Monomial y = Monomial::var(VarId::param("y1"));

  FactoredLFunction want;
  want.mul_factor(b.inverse() * x * T * X, -1);
  want.mul_factor(b * y.inverse() * T * X, -1);
  want.mul_factor(x * y.inverse() * T.pow(2) * X.pow(2), 1);
  REQUIRE(rf_equal(z, want));
}

TEST_CASE("gl closed form honors the lattice override") {
  FactoredLFunction z3 = z_gl_closed(1, 1, bs(1), xs(1), ys(1), 3).value;
  for (const auto& [M, e] : z3.factors()) {
    int ex = M.exp_of(VarId::x());
    REQUIRE((ex == 3 || ex == 6));
  }
}

TEST_CASE("gl reduction identity") {
  REQUIRE(verify_gl_reduction(2, 1, 1, 1, SatakeSet::symbols("b", 1),
                              SatakeSet::symbols("c", 1), xs(1), ys(1)));
  REQUIRE(verify_gl_reduction(3, 2, 1, 1, SatakeSet::symbols("b", 2),
                              SatakeSet::symbols("c", 1), xs(1), ys(1)));
  REQUIRE(verify_gl_reduction(3, 1, 2, 2, SatakeSet::symbols("b", 1),
                              SatakeSet::symbols("c", 2), xs(2), ys(2)));
  REQUIRE_THROWS_AS(verify_gl_reduction(3, 1, 1, 1, SatakeSet::symbols("b", 1),
                                        SatakeSet::symbols("c", 1), xs(1),
                                        ys(1)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(verify_gl_reduction(2, 1, 1, 1, SatakeSet::symbols("b", 2),
                                        SatakeSet::symbols("c", 1), xs(1),
                                        ys(1)),
                    std::invalid_argument);
}

TEST_CASE("central characters must cancel for numeric data") {
  SatakeSet piv = SatakeSet::values({rat(1)});
  SatakeSet bad = SatakeSet::values({rat(2)});
  SatakeSet good = SatakeSet::values({rat(1, 2)});
  REQUIRE_THROWS_AS(z_gl_closed(1, 1, piv, bad, bad),
                    std::invalid_argument);
  REQUIRE_NOTHROW(z_gl_closed(1, 1, piv, bad, good));
  // symbolic parameters carry no constraint
  REQUIRE_NOTHROW(z_gl_closed(1, 1, piv, xs(1), ys(1)));
}

TEST_CASE("intertwining factor closed form at low rank") {
  Monomial T = Monomial::var(VarId::t());
  Monomial x = Monomial::var(VarId::param("x1"));

  FactoredLFunction sp = d_tau_closed(GroupData(GroupKind::Sp, 1), 1, 1, xs(1));
  FactoredLFunction wantSp;
  wantSp.mul_factor(x * T * Monomial::var(VarId::x(), 3), -1);
  wantSp.mul_factor(x * T.pow(3) * Monomial::var(VarId::x(), 3), 1);
  REQUIRE(rf_equal(sp, wantSp));

  REQUIRE(d_tau_closed(GroupData(GroupKind::SO, 1), 1, 1, xs(1)).is_trivial());
}

TEST_CASE("intertwining factor telescopes from the root product") {
  for (GroupKind g : {GroupKind::Sp, GroupKind::SO})
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        GroupData group(g, n);
        REQUIRE(rf_equal(d_tau_gk(group, n, k, xs(k)),
                         d_tau_closed(group, n, k, xs(k))));
      }
}

TEST_CASE("standard part telescopes") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      int alpha = GroupData(GroupKind::Sp, n).alpha(k);
      REQUIRE(rf_equal(gk_standard_raw(n, xs(k), alpha),
                       gk_standard_closed(n, xs(k), alpha)));
    }
}

TEST_CASE("classical closed form at rank one") {
  FactoredLFunction z =
      z_classical_closed(GroupData(GroupKind::Sp, 1), 1, 1, bs(1), xs(1)).value;
  Monomial T = Monomial::var(VarId::t());
  Monomial X3 = Monomial::var(VarId::x(), 3);
  Monomial X6 = Monomial::var(VarId::x(), 6);
  Monomial b = Monomial::var(VarId::param("b1"));
  Monomial x = Monomial::var(VarId::param("x1"));

  FactoredLFunction want;
  want.mul_factor(b * x * T * X3, -1);
  want.mul_factor(x * T * X3, -1);
  want.mul_factor(b.inverse() * x * T * X3, -1);
  want.mul_factor(x * T.pow(3) * X3, 1);
  want.mul_factor(x.pow(2) * T.pow(2) * X6, 1);
  REQUIRE(rf_equal(z, want));

  REQUIRE_THROWS_AS(
      z_classical_closed(GroupData(GroupKind::GL, 1), 1, 1, bs(1), xs(1)),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      z_classical_closed(GroupData(GroupKind::Sp, 2), 1, 1, bs(1), xs(1)),
      std::invalid_argument);
}

TEST_CASE("classical reduction identity") {
  for (GroupKind g : {GroupKind::Sp, GroupKind::SO})
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 2; ++k) {
        REQUIRE(
            verify_classical_reduction(GroupData(g, n), n, k, bs(n), xs(k)));
      }
}

TEST_CASE("psi factor inventory") {
  FactoredLFunction psi = psi_closed(1, P, xs(1), ys(1));
  Monomial T = Monomial::var(VarId::t());
  Monomial p = Monomial::var(P);
  Monomial x = Monomial::var(VarId::param("x1"));
  Monomial y = Monomial::var(VarId::param("y1"));

  FactoredLFunction want;
  want.mul_factor(p * x.inverse() * Monomial::var(VarId::x(), -1) * T, -1);
  want.mul_factor(p * y.inverse() * Monomial::var(VarId::x(), 1) * T, -1);
  want.mul_factor(x * y.inverse() * Monomial::var(VarId::x(), 2) * T.pow(2), 1);
  REQUIRE(rf_equal(psi, want));

  REQUIRE_THROWS_AS(psi_closed(1, VarId::t(), xs(1), ys(1)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(psi_closed(2, P, xs(1), ys(2)), std::invalid_argument);
}

TEST_CASE("psi with a spectral shift variable") {
  VarId zeta = VarId::param("z");
  FactoredLFunction shifted = psi_closed(1, P, xs(1), ys(1), zeta);
  for (const auto& [M, e] : shifted.factors()) {
    if (e == -1) REQUIRE(M.exp_of(zeta) == -1);
  }
  FactoredLFunction pinned =
      shifted.substituted({{zeta, Monomial::one()}});
  REQUIRE(rf_equal(pinned, psi_closed(1, P, xs(1), ys(1))));
}

TEST_CASE("psi series identity") {
  REQUIRE(psi_series_check(1, P, xs(1), ys(1), 8));
  REQUIRE(psi_series_check(2, P, xs(2), ys(2), 5));
}

TEST_CASE("rank one gamma relation") {
  REQUIRE(verify_prop_gl1(1, P, xs(1), ys(1)));
  REQUIRE(verify_prop_gl1(2, P, xs(2), ys(2)));

  // an inverted gamma factor must break the relation
  FactoredLFunction gamma = gamma_unramified(P, xs(2), 2).inverse();
  SatakeSet pi(std::vector<Monomial>{Monomial::var(P)});
  FactoredLFunction z = z_gl_closed(1, 2, pi, xs(2), ys(2)).value;
  REQUIRE(!rf_equal(gamma * z, psi_closed(2, P, xs(2), ys(2))));
}
