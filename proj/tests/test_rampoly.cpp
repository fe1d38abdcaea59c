#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "covercount/rampoly.hpp"
#include "covercount/rng.hpp"

using namespace covercount;

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

/// Random cover function with distinct rational lambda and full-degree
/// numerator/denominator polynomials.
CoverFunction<Rational> random_cover(Rng& rng, int m, int n0, int ninf, int r) {
  CoverFunction<Rational> cf;
  cf.r = r;
  while (static_cast<int>(cf.lambda.size()) < m) {
    Rational cand(rng.uniform_int(-20, 20), rng.uniform_int(1, 4));
    if (std::find(cf.lambda.begin(), cf.lambda.end(), cand) == cf.lambda.end())
      cf.lambda.push_back(cand);
  }
  for (int i = 0; i < m; ++i) {
    int o = 0;
    while (o == 0) o = static_cast<int>(rng.uniform_int(-4, 4));
    cf.ord.push_back(o);
  }
  auto random_poly = [&rng](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(rng.uniform_int(-8, 8), rng.uniform_int(1, 3));
    c.emplace_back(rng.uniform_int(1, 8), 1);  // nonzero leading coefficient
    return RationalPoly(std::move(c));
  };
  cf.p0 = random_poly(n0);
  cf.pinf = random_poly(ninf);
  cf.deg0 = n0;
  cf.deg_inf = ninf;
  return cf;
}

}  // namespace

TEST_CASE("build_psi worked examples") {
  CoverFunction<Rational> cf;
  cf.lambda = {rat(1), rat(-1)};
  cf.ord = {1, -1};
  cf.p0 = RationalPoly({0, 1});
  cf.pinf = RationalPoly::constant(1);
  cf.r = 2;
  CHECK(build_psi(cf) == RationalPoly({-2, 2, 2}));  // 2x^2 + 2x - 2

  cf.ord = {1, -3};
  CHECK(build_psi(cf) == RationalPoly({-2, 4}));  // 4x - 2, degree drops

  // two points, trivial P blocks: psi is the nonzero constant o1(l1 - l2)
  CoverFunction<Rational> flat;
  flat.lambda = {rat(5), rat(2)};
  flat.ord = {7, -7};
  flat.p0 = RationalPoly::constant(1);
  flat.pinf = RationalPoly::constant(1);
  flat.r = 3;
  CHECK(build_psi(flat) == RationalPoly::constant(rat(21)));  // 7 * (5 - 2)
}

TEST_CASE("build_rho worked examples") {
  std::map<int, RationalPoly> squares{{2, RationalPoly({-1, 0, 1})}};
  CHECK(build_rho(squares) == RationalPoly({1, 0, -2, 0, 1}));

  std::map<int, RationalPoly> identity{{1, RationalPoly({2, 3, 5})}};
  CHECK(build_rho(identity) == RationalPoly({2, 3, 5}));

  std::map<int, RationalPoly> mixed{{1, RationalPoly({-3, 1})}, {2, RationalPoly({1, 1})}};
  CHECK(build_rho(mixed) == RationalPoly({-3, -5, -1, 1}));
}

TEST_CASE("build_rho degree additivity") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<int, RationalPoly> factors;
    int expected = 0;
    for (int ell = 1; ell <= 3; ++ell) {
      int deg = static_cast<int>(rng.uniform_int(0, 3));
      std::vector<Rational> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(rng.uniform_int(-5, 5));
      c.emplace_back(rng.uniform_int(1, 5));
      factors[ell] = RationalPoly(std::move(c));
      expected += ell * deg;
    }
    CHECK(build_rho(factors).degree() == expected);
  }
}

TEST_CASE("in_U exact membership") {
  CoverFunction<Rational> cf;
  cf.lambda = {rat(2), rat(3)};
  cf.ord = {1, -1};
  cf.r = 2;

  cf.p0 = RationalPoly({0, 1});  // x
  cf.pinf = RationalPoly({1, 1});  // x + 1
  CHECK(in_U(cf).ok);

  cf.p0 = RationalPoly({-2, 1});  // root at lambda_1
  cf.pinf = RationalPoly::constant(1);
  CHECK(!in_U(cf).ok);

  cf.p0 = RationalPoly({25, -10, 1});  // (x-5)^2
  CHECK(!in_U(cf).ok);

  cf.p0 = RationalPoly({0, 1});
  cf.pinf = RationalPoly({0, 1});  // common root
  CHECK(!in_U(cf).ok);

  // root at infinity in both blocks
  cf.p0 = RationalPoly::constant(1);
  cf.deg0 = 1;  // nominal degree 1 with vanishing leading coefficient
  cf.pinf = RationalPoly({1, 1});
  cf.deg_inf = 2;
  CHECK(!in_U(cf).ok);

  // double root at infinity in one block
  cf.deg0 = -1;
  cf.p0 = RationalPoly({1, 1});
  cf.pinf = RationalPoly({3, 1});
  cf.deg_inf = 3;
  CHECK(!in_U(cf).ok);
}

TEST_CASE("in_U numeric mirrors the exact conditions") {
  CoverFunction<Complex> cf;
  cf.lambda = {Complex(2, 0), Complex(3, 0)};
  cf.ord = {1, -1};
  cf.r = 2;
  cf.p0 = ComplexPoly({Complex(0, 0), Complex(1, 0)});
  cf.pinf = ComplexPoly({Complex(1, 0), Complex(1, 0)});
  CHECK(in_U(cf).ok);

  cf.p0 = ComplexPoly({Complex(-2, 0), Complex(1, 0)});
  cf.pinf = ComplexPoly::constant(Complex(1, 0));
  CHECK(!in_U(cf).ok);

  cf.p0 = ComplexPoly({Complex(25, 0), Complex(-10, 0), Complex(1, 0)});
  CHECK(!in_U(cf).ok);
}

TEST_CASE("degree cancellation for spec-consistent data") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    // Balanced data: sum ord = r (ninf - n0).
    int r = trial % 2 == 0 ? 2 : 3;
    int n0 = static_cast<int>(rng.uniform_int(0, 2));
    int ninf = static_cast<int>(rng.uniform_int(0, 2));
    int m = static_cast<int>(rng.uniform_int(3, 5));
    CoverFunction<Rational> cf = random_cover(rng, m, n0, ninf, r);
    long long target = static_cast<long long>(r) * (ninf - n0);
    long long have = 0;
    for (size_t i = 0; i + 1 < cf.ord.size(); ++i) have += cf.ord[i];
    long long last = target - have;
    if (last == 0) continue;
    cf.ord.back() = static_cast<int>(last);
    REQUIRE(cf.balance() == 0);
    RationalPoly psi = build_psi(cf);
    CHECK(psi.degree() <= cf.expected_b());
    CHECK(!psi.is_zero());
  }
}

TEST_CASE("build_psi is bilinear in the polynomial blocks") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    CoverFunction<Rational> cf = random_cover(rng, 3, 2, 1, 2);
    CoverFunction<Rational> cg = cf;
    cg.p0 = RationalPoly({rat(3), rat(-1), rat(2)});
    Rational a(rng.uniform_int(-5, 5)), b(rng.uniform_int(-5, 5));

    CoverFunction<Rational> combined = cf;
    combined.p0 = a * cf.p0 + b * cg.p0;
    CHECK(build_psi(combined) == a * build_psi(cf) + b * build_psi(cg));

    CoverFunction<Rational> ci = cf;
    ci.pinf = RationalPoly({rat(1), rat(4)});
    CoverFunction<Rational> combined_inf = cf;
    combined_inf.pinf = a * cf.pinf + b * ci.pinf;
    CHECK(build_psi(combined_inf) == a * build_psi(cf) + b * build_psi(ci));
  }
}

TEST_CASE("prefactor identity: psi recovers the derivative of the cover") {
  Rng rng(47);
  int exact_checked = 0, float_checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    int r = 2 + static_cast<int>(rng.uniform_int(0, 1));
    CoverFunction<Rational> cf = random_cover(rng, 3, 1, 1, r);
    RationalPoly psi = build_psi(cf);
    CoverFunction<Complex> cfc = to_complex_cover(cf);
    ComplexPoly psic = to_complex_poly(psi);

    for (int s = 0; s < 20; ++s) {
      Rational x(rng.uniform_int(-30, 30), rng.uniform_int(1, 7));
      bool singular = cf.p0(x) == 0 || cf.pinf(x) == 0;
      for (const auto& l : cf.lambda) singular = singular || x == l;
      if (singular) continue;

      // exact path
      Rational lhs = psi(x);
      for (size_t i = 0; i < cf.lambda.size(); ++i) {
        Rational diff = x - cf.lambda[i];
        Rational p = 1;
        int e = cf.ord[i] - 1;
        for (int j = 0; j < std::abs(e); ++j) p *= diff;
        if (e >= 0)
          lhs *= p;
        else
          lhs /= p;
      }
      Rational p0v = cf.p0(x), pinfv = cf.pinf(x);
      for (int j = 0; j < r - 1; ++j) lhs *= p0v;
      for (int j = 0; j < r + 1; ++j) lhs /= pinfv;
      CHECK(lhs == eval_cover_derivative(cf, x));
      ++exact_checked;

      // floating path
      Complex xc = to_complex(x);
      Complex lhs_c = psic(xc);
      for (size_t i = 0; i < cfc.lambda.size(); ++i)
        lhs_c *= std::pow(xc - cfc.lambda[i], cf.ord[i] - 1);
      lhs_c *= std::pow(cfc.p0(xc), r - 1) / std::pow(cfc.pinf(xc), r + 1);
      Complex rhs_c = eval_cover_derivative(cfc, xc);
      double scale = std::max({1.0, std::abs(lhs_c), std::abs(rhs_c)});
      CHECK(std::abs(lhs_c - rhs_c) / scale < 1e-9);
      ++float_checked;
    }
  }
  CHECK(exact_checked > 100);
  CHECK(float_checked > 100);
}

TEST_CASE("branch profile of a constant psi is empty") {
  CoverFunction<Complex> flat;
  flat.lambda = {Complex(5, 0), Complex(2, 0)};
  flat.ord = {7, -7};
  flat.p0 = ComplexPoly::constant(Complex(1, 0));
  flat.pinf = ComplexPoly::constant(Complex(1, 0));
  flat.r = 3;
  BranchProfile profile = branch_profile(flat, 1e-6);
  CHECK(profile.entries.empty());
}

TEST_CASE("branch profile reads multiplicities and skips fixed data") {
  // psi = 4x - 2 for this cover: one moving double point at x = 1/2.
  CoverFunction<Complex> cf;
  cf.lambda = {Complex(1, 0), Complex(-1, 0)};
  cf.ord = {1, -3};
  cf.p0 = ComplexPoly({Complex(0, 0), Complex(1, 0)});
  cf.pinf = ComplexPoly::constant(Complex(1, 0));
  cf.r = 2;
  BranchProfile profile = branch_profile(cf, 1e-6);
  REQUIRE(profile.entries.size() == 1);
  CHECK(!profile.entries[0].at_infinity);
  CHECK(profile.entries[0].index == 2);
  CHECK(std::abs(profile.entries[0].point - Complex(0.5, 0)) < 1e-9);
}

TEST_CASE("branch profile records ramification at infinity") {
  // P0 = x + 2 makes psi constant while b = 1: a double point at x = inf.
  CoverFunction<Complex> cf;
  cf.lambda = {Complex(1, 0), Complex(-1, 0)};
  cf.ord = {1, -3};
  cf.p0 = ComplexPoly({Complex(2, 0), Complex(1, 0)});
  cf.pinf = ComplexPoly::constant(Complex(1, 0));
  cf.r = 2;
  REQUIRE(cf.balance() == 0);
  REQUIRE(cf.expected_b() == 1);
  BranchProfile profile = branch_profile(cf, 1e-6);
  REQUIRE(profile.entries.size() == 1);
  CHECK(profile.entries[0].at_infinity);
  CHECK(profile.entries[0].index == 2);
}

TEST_CASE("branch profile flags non-U covers") {
  CoverFunction<Complex> cf;
  cf.lambda = {Complex(1, 0), Complex(-1, 0), Complex(2, 0)};
  cf.ord = {1, 1, -2};
  cf.p0 = ComplexPoly({Complex(-1, 0), Complex(1, 0)});  // root at lambda_1
  cf.pinf = ComplexPoly::constant(Complex(1, 0));
  cf.r = 2;
  BranchProfile profile = branch_profile(cf, 1e-6);
  CHECK(profile.extraneous_possible);
}
