#include "covercount/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace covercount {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

BigInt content(const std::vector<BigInt>& c) {
  BigInt g = 0;
  for (const auto& v : c) g = gcd(g, v);
  return g;
}

std::vector<BigInt> primitive(std::vector<BigInt> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return c;
  BigInt g = content(c);
  if (c.back() < 0) g = -g;  // normalize sign so the leading coefficient is positive
  for (auto& v : c) v /= g;
  return c;
}

/// Pseudo-remainder of primitive integer polynomials: lc(b)^(da-db+1) * a mod b.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const BigInt& lead = b.back();
  int da = static_cast<int>(a.size()) - 1;
  while (da >= db) {
    BigInt coef = a.back();
    for (auto& v : a) v *= lead;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] -= coef * b[static_cast<size_t>(j)];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    da = static_cast<int>(a.size()) - 1;
  }
  return a;
}

}  // namespace

std::vector<BigInt> integer_primitive(const RationalPoly& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& q : p.coeffs()) den = lcm(den, denominator(q));
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(numerator(q) * (den / denominator(q)));
  return primitive(std::move(c));
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  std::vector<BigInt> r0 = integer_primitive(a);
  std::vector<BigInt> r1 = integer_primitive(b);
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (true) {
    std::vector<BigInt> rem = pseudo_rem(r0, r1);
    if (rem.empty()) break;
    r0 = std::move(r1);
    r1 = primitive(std::move(rem));
  }
  std::vector<Rational> c;
  c.reserve(r1.size());
  for (const auto& v : r1) c.push_back(Rational(v));
  return monic(RationalPoly(std::move(c)));
}

RationalPoly squarefree_part(const RationalPoly& a) {
  if (a.is_zero()) throw ZeroInput("squarefree_part: zero polynomial");
  if (a.degree() == 0) return RationalPoly::constant(1);
  RationalPoly g = gcd(a, derivative(a));
  auto [q, r] = divmod(a, g);
  (void)r;  // exact by construction
  return monic(q);
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& a) {
  if (a.is_zero()) throw ZeroInput("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<RationalPoly, int>> out;
  if (a.degree() == 0) return out;
  RationalPoly f = monic(a);
  RationalPoly fp = derivative(f);
  RationalPoly u = gcd(f, fp);
  RationalPoly v = divmod(f, u).first;   // product of distinct roots
  RationalPoly w = divmod(fp, u).first;
  int mult = 1;
  while (v.degree() > 0) {
    RationalPoly z = w - derivative(v);
    RationalPoly s = gcd(v, z);
    if (s.degree() > 0) out.emplace_back(s, mult);
    v = divmod(v, s).first;
    w = divmod(z, s).first;
    ++mult;
  }
  return out;
}

ComplexPoly to_complex_poly(const RationalPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(to_complex(q));
  return ComplexPoly(std::move(c));
}

}  // namespace covercount
