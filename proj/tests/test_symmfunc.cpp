#include <catch2/catch_amalgamated.hpp>

#include "lcalc/symmfunc.hpp"
#include "lcalc/textio.hpp"

using namespace lcalc;

namespace {

Monomial var_of(int value) {
  return Monomial::var(VarId::param("x" + std::to_string(value)));
}

// Schur polynomial by direct semistandard tableau enumeration: rows weakly
// increase, columns strictly increase, entries bounded by k.
Poly schur_ssyt(const std::vector<int>& shape, int k) {
  std::vector<int> sh;
  for (int part : shape)
    if (part > 0) sh.push_back(part);
  if (sh.empty()) return Poly(Rational(1));
  std::vector<std::vector<int>> tab(sh.size());
  for (std::size_t r = 0; r < sh.size(); ++r)
    tab[r].assign(static_cast<std::size_t>(sh[r]), 0);
  Poly total;
  auto fill = [&](auto&& self, std::size_t r, int c) -> void {
    if (r == sh.size()) {
      Monomial m = Monomial::one();
      for (const auto& row : tab)
        for (int v : row) m *= var_of(v);
      total += Poly(m);
      return;
    }
    std::size_t nr = r;
    int nc = c + 1;
    if (nc >= sh[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][static_cast<std::size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= k; ++v) {
      tab[r][static_cast<std::size_t>(c)] = v;
      self(self, nr, nc);
    }
  };
  fill(fill, 0, 0);
  return total;
}

// Complete homogeneous polynomial by enumerating weakly increasing index
// sequences.
Poly h_enum(int m, int k) {
  Poly total;
  std::vector<int> seq(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == m) {
      Monomial prod = Monomial::one();
      for (int v : seq) prod *= var_of(v);
      total += Poly(prod);
      return;
    }
    for (int v = lo; v <= k; ++v) {
      seq[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 1);
  return total;
}

Rational weyl_dimension(std::vector<int> lam, int k) {
  lam.resize(static_cast<std::size_t>(k), 0);
  Rational dim(1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      dim *= rat(lam[static_cast<std::size_t>(i)] -
                     lam[static_cast<std::size_t>(j)] + j - i,
                 j - i);
  return dim;
}

std::map<VarId, Rational> all_ones(int k) {
  std::map<VarId, Rational> point;
  for (int i = 1; i <= k; ++i)
    point.emplace(VarId::param("x" + std::to_string(i)), rat(1));
  return point;
}

}  // namespace

TEST_CASE("complete homogeneous polynomials match enumeration") {
  for (int k = 1; k <= 3; ++k) {
    SatakeSet vars = SatakeSet::symbols("x", k);
    std::vector<Poly> table = complete_homogeneous_table(4, vars);
    REQUIRE(table.size() == 5);
    for (int m = 0; m <= 4; ++m) {
      REQUIRE(table[static_cast<std::size_t>(m)] == h_enum(m, k));
      REQUIRE(complete_homogeneous(m, vars) == h_enum(m, k));
    }
  }
}

TEST_CASE("jacobi-trudi schur equals tableau enumeration") {
  const std::vector<std::vector<int>> shapes = {
      {},        {1},       {2},       {1, 1},    {3},       {2, 1},
      {1, 1, 1}, {2, 2},    {3, 1},    {2, 1, 1}, {4},       {2, 2, 1},
      {3, 2, 1}, {2, 2, 2}, {4, 2},    {3, 3},
  };
  for (int k = 2; k <= 4; ++k) {
    SatakeSet vars = SatakeSet::symbols("x", k);
    for (const auto& shape : shapes) {
      REQUIRE(schur(DominantWeight(shape), vars) == schur_ssyt(shape, k));
    }
  }
}

TEST_CASE("schur vanishes when the shape is too tall") {
  SatakeSet one = SatakeSet::symbols("x", 1);
  REQUIRE(schur(DominantWeight({1, 1}), one).is_zero());
  SatakeSet two = SatakeSet::symbols("x", 2);
  REQUIRE(schur(DominantWeight({2, 1, 1}), two).is_zero());
}

TEST_CASE("schur at the identity point gives the weyl dimension") {
  const std::vector<std::vector<int>> shapes = {
      {1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {4, 3, 2, 1}, {3, 2, 1},
  };
  for (int k = 2; k <= 4; ++k) {
    SatakeSet vars = SatakeSet::symbols("x", k);
    for (const auto& shape : shapes) {
      if (static_cast<int>(shape.size()) > k) continue;
      Poly s = schur(DominantWeight(shape), vars);
      REQUIRE(s.eval(all_ones(k)) == weyl_dimension(shape, k));
    }
  }
}

TEST_CASE("dominant weight validation") {
  REQUIRE_THROWS_AS(DominantWeight({1, 2}), std::invalid_argument);
  REQUIRE_NOTHROW(DominantWeight({2, 0, -1}));
  SatakeSet vars = SatakeSet::symbols("x", 2);
  REQUIRE_THROWS_AS(schur(DominantWeight({1, -1}), vars),
                    std::invalid_argument);
}

TEST_CASE("whittaker values at torus points") {
  SatakeSet xy = SatakeSet::symbols("x", 2);
  Monomial t = Monomial::var(VarId::t());

  REQUIRE(shintani_whittaker(xy, {0, 0}) == Poly(Rational(1)));

  Poly w10 = complete_homogeneous(1, xy);
  w10.mul_monomial(t);
  REQUIRE(shintani_whittaker(xy, {1, 0}) == w10);

  Poly w20 = complete_homogeneous(2, xy);
  w20.mul_monomial(t.pow(2));
  REQUIRE(shintani_whittaker(xy, {2, 0}) == w20);

  REQUIRE(shintani_whittaker(xy, {1, 1}) == Poly(xy.product()));

  Poly w21 = complete_homogeneous(1, xy);
  w21.mul_monomial(t * xy.product());
  REQUIRE(shintani_whittaker(xy, {2, 1}) == w21);

  // off the dominant cone the value vanishes
  REQUIRE(shintani_whittaker(xy, {0, 1}).is_zero());
  REQUIRE(shintani_whittaker(xy, {-1, 0}).is_zero());

  // negative dominant weights pick up inverse determinant powers
  Poly wneg = complete_homogeneous(1, xy);
  wneg.mul_monomial(t * xy.product().inverse());
  REQUIRE(shintani_whittaker(xy, {0, -1}) == wneg);

  REQUIRE_THROWS_AS(shintani_whittaker(xy, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("whittaker values are stable under the determinant twist") {
  for (int k = 1; k <= 3; ++k) {
    SatakeSet vars = SatakeSet::symbols("x", k);
    std::vector<std::vector<int>> lams = {
        std::vector<int>(static_cast<std::size_t>(k), 0)};
    if (k >= 2) {
      std::vector<int> lam(static_cast<std::size_t>(k), 0);
      lam[0] = 2;
      lam[1] = 1;
      if (lam.size() >= 3) lam[2] = -1;
      lams.push_back(lam);
    }
    for (const auto& lam : lams) {
      std::vector<int> up(lam);
      for (int& part : up) ++part;
      Poly scaled = shintani_whittaker(vars, lam);
      scaled.mul_monomial(vars.product());
      REQUIRE(shintani_whittaker(vars, up) == scaled);
    }
  }
}

TEST_CASE("rankin-selberg series identity") {
  VarId p = VarId::param("p");
  Monomial scale = Monomial::var(p) * Monomial::var(VarId::x());
  for (int k = 1; k <= 3; ++k) {
    REQUIRE(rs_series_check(SatakeSet::symbols("x", k), scale, p, 8));
  }
  Monomial heavier = Monomial::var(p) * Monomial::var(VarId::t(), 3);
  REQUIRE(rs_series_check(SatakeSet::symbols("x", 2), heavier, p, 6));
}

TEST_CASE("rankin-selberg series validates the scale") {
  VarId p = VarId::param("p");
  SatakeSet vars = SatakeSet::symbols("x", 2);
  REQUIRE_THROWS_AS(
      rs_series_check(vars, Monomial::var(p, 2), p, 4),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      rs_series_check(vars, Monomial::var(VarId::x()), p, 4),
      std::invalid_argument);
  SatakeSet tainted(std::vector<Monomial>{Monomial::var(p)});
  REQUIRE_THROWS_AS(
      rs_series_check(tainted, Monomial::var(p), p, 4),
      std::invalid_argument);
}

TEST_CASE("induced parameter multiset") {
  SatakeSet tau = SatakeSet::symbols("x", 1);
  SatakeSet tauPrime = SatakeSet::symbols("y", 1);
  SatakeSet ind = induced_params(tau, tauPrime, 1);
  SatakeSet expect(std::vector<Monomial>{
      Monomial::var(VarId::param("y1"), -1) * Monomial::var(VarId::x()),
      Monomial::var(VarId::param("x1"), -1) * Monomial::var(VarId::x(), -1)});
  REQUIRE(multiset_equal(ind, expect));

  SatakeSet ind2 =
      induced_params(SatakeSet::symbols("x", 2), SatakeSet::symbols("y", 2), 2);
  REQUIRE(ind2.size() == 4);
  int plus = 0, minus = 0;
  for (const auto& e : ind2.entries()) {
    if (e.exp_of(VarId::x()) == 2) ++plus;
    if (e.exp_of(VarId::x()) == -2) ++minus;
  }
  REQUIRE(plus == 2);
  REQUIRE(minus == 2);

  REQUIRE_THROWS_AS(
      induced_params(SatakeSet::symbols("x", 1), SatakeSet::symbols("y", 2), 2),
      std::invalid_argument);
}
