#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "covercount/numeric.hpp"

namespace covercount {

/// Dense univariate polynomial over a scalar field. Coefficients are stored
/// with index = degree; the highest stored coefficient is nonzero and the
/// zero polynomial is the empty list. The coefficient domain is the template
/// parameter, so mixing domains is a compile error.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }

  static Poly constant(Scalar v) { return Poly(std::vector<Scalar>{std::move(v)}); }

  static Poly monomial(int degree, Scalar lead = Scalar(1)) {
    std::vector<Scalar> c(static_cast<size_t>(degree) + 1, Scalar(0));
    c.back() = std::move(lead);
    return Poly(std::move(c));
  }

  /// Monic polynomial with the given roots.
  static Poly from_roots(const std::vector<Scalar>& roots) {
    Poly p = constant(Scalar(1));
    for (const Scalar& r : roots) p = p * Poly({Scalar(0) - r, Scalar(1)});
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the stored degree.
  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<size_t>(i)];
  }

  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<Scalar> c(a.c_);
    for (auto& v : c) v = Scalar(0) - v;
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Scalar& s) {
    std::vector<Scalar> c(a.c_);
    for (auto& v : c) v = v * s;
    return Poly(std::move(c));
  }

  friend Poly operator*(const Scalar& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

template <typename Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  if (p.degree() < 1) return Poly<Scalar>();
  std::vector<Scalar> c(static_cast<size_t>(p.degree()), Scalar(0));
  for (int i = 1; i <= p.degree(); ++i)
    c[static_cast<size_t>(i - 1)] = p.coeff(i) * Scalar(i);
  return Poly<Scalar>(std::move(c));
}

template <typename Scalar>
Poly<Scalar> pow(const Poly<Scalar>& p, int n) {
  Poly<Scalar> acc = Poly<Scalar>::constant(Scalar(1));
  Poly<Scalar> base = p;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

/// Shift by x^k (multiply by the degree-k monomial).
template <typename Scalar>
Poly<Scalar> shift_up(const Poly<Scalar>& p, int k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Scalar> c(static_cast<size_t>(p.degree() + k) + 1, Scalar(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i + k)] = p.coeff(i);
  return Poly<Scalar>(std::move(c));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw ZeroInput("divmod: division by zero polynomial");
  std::vector<Scalar> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {Poly<Scalar>(), a};
  std::vector<Scalar> quo(static_cast<size_t>(a.degree() - db) + 1, Scalar(0));
  Scalar lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Scalar coef = rem[static_cast<size_t>(i)] / lead;
    if (coef == Scalar(0)) continue;
    quo[static_cast<size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - coef * b.coeff(j);
  }
  return {Poly<Scalar>(std::move(quo)), Poly<Scalar>(std::move(rem))};
}

template <typename Scalar>
Poly<Scalar> monic(const Poly<Scalar>& p) {
  if (p.is_zero()) return p;
  Scalar inv = Scalar(1) / p.leading();
  return p * inv;
}

using RationalPoly = Poly<Rational>;
using ComplexPoly = Poly<Complex>;

/// Integer coefficient vector of a rational polynomial after clearing
/// denominators and dividing out the integer content; empty for zero.
std::vector<BigInt> integer_primitive(const RationalPoly& p);

/// gcd over the rationals, monic-normalized. Uses a primitive
/// (content-normalized) remainder sequence over the integers so that
/// coefficient growth stays polynomial at the degrees used here.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// a / gcd(a, a'), monic-normalized. Throws ZeroInput on the zero polynomial.
RationalPoly squarefree_part(const RationalPoly& a);

/// Yun decomposition: list of (monic squarefree factor, multiplicity) with
/// distinct multiplicities in increasing order; product of factor^mult equals
/// the input up to a constant.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& a);

/// Coefficient-wise conversion to the complex floating domain.
ComplexPoly to_complex_poly(const RationalPoly& p);

}  // namespace covercount
