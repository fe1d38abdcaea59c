#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covercount/poly.hpp"
#include "covercount/rng.hpp"

using namespace covercount;

namespace {

RationalPoly random_poly(Rng& rng, int max_deg) {
  int deg = static_cast<int>(rng.uniform_int(0, max_deg));
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i)
    c.emplace_back(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("product examples") {
  RationalPoly xm1({-1, 1});
  RationalPoly xp1({1, 1});
  CHECK(xm1 * xp1 == RationalPoly({-1, 0, 1}));

  CHECK((RationalPoly() * xp1).is_zero());

  RationalPoly xm3({-3, 1});
  RationalPoly prod = xm3 * xp1 * xp1;
  CHECK(prod == RationalPoly({-3, -5, -1, 1}));
}

TEST_CASE("degree additivity of products") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    RationalPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).is_zero());
    } else {
      CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("ring laws hold exactly") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    RationalPoly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("derivative examples and Leibniz rule") {
  CHECK(derivative(RationalPoly({0, 0, 1})) == RationalPoly({0, 2}));
  CHECK(derivative(RationalPoly::constant(5)).is_zero());
  CHECK(derivative(RationalPoly({-3, -5, -1, 1})) == RationalPoly({-5, -2, 3}));

  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    RationalPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
  }
  // degree drops by exactly one on nonconstant input
  for (int i = 0; i < 20; ++i) {
    RationalPoly a = random_poly(rng, 6);
    if (a.degree() >= 1) CHECK(derivative(a).degree() == a.degree() - 1);
  }
}

TEST_CASE("divmod reconstructs the dividend") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    RationalPoly a = random_poly(rng, 8), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd on common factors") {
  RationalPoly xm1({-1, 1}), xp2({2, 1}), xm3({-3, 1});
  CHECK(gcd(xm1 * xp2, xm1 * xm3) == monic(xm1));
  CHECK(gcd(xm1, xp2).degree() == 0);

  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    RationalPoly g = random_poly(rng, 3);
    RationalPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    RationalPoly d = gcd(a * g, b * g);
    auto [q, r] = divmod(d, monic(g));
    (void)q;
    CHECK(r.is_zero());  // gcd contains every common factor
  }
}

TEST_CASE("squarefree_part examples") {
  RationalPoly xm1({-1, 1}), xp1({1, 1}), xm3({-3, 1});
  CHECK(squarefree_part(xm1 * xm1) == xm1);
  CHECK(squarefree_part(RationalPoly({-1, 0, 1})) == RationalPoly({-1, 0, 1}));
  CHECK(squarefree_part(xm3 * xp1 * xp1) == RationalPoly({-3, -2, 1}));
  CHECK(gcd(xm3 * xp1 * xp1, derivative(xm3 * xp1 * xp1)) == xp1);
  CHECK_THROWS_AS(squarefree_part(RationalPoly()), ZeroInput);
}

TEST_CASE("squarefree_part of powers recovers the base") {
  Rng rng(31);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 10; ++i) {
      // distinct roots make the base squarefree
      std::vector<Rational> roots;
      for (int k = 0; k < 3; ++k) {
        Rational r(rng.uniform_int(-40, 40), 7);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      RationalPoly base = RationalPoly::from_roots(roots);
      CHECK(squarefree_part(pow(base, n)) == base);
    }
  }
}

TEST_CASE("squarefree decomposition multiplicity structure") {
  RationalPoly xm1({-1, 1}), xp1({1, 1}), xm3({-3, 1});
  auto dec = squarefree_decomposition(xm3 * xp1 * xp1 * pow(xm1, 3));
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == monic(xm3));
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == monic(xp1));
  CHECK(dec[2].second == 3);
  CHECK(dec[2].first == monic(xm1));
}

TEST_CASE("evaluation is exact") {
  RationalPoly p({Rational(1, 2), Rational(-3), Rational(1)});
  CHECK(p(Rational(2)) == Rational(1, 2) - 6 + 4);
  CHECK(p(Rational(0)) == Rational(1, 2));
}
