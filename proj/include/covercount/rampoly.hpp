#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "covercount/poly.hpp"
#include "covercount/roots.hpp"

namespace covercount {

/// A candidate quotient cover h'(x) = prod (x - lambda_i)^{ord_i} * (P0/Pinf)^r.
/// deg0 / deg_inf are the nominal (projective) degrees of P0, Pinf: the
/// polynomials live in spaces of degree *at most* deg0, deg_inf, and a drop in
/// actual degree encodes a root at x = infinity. Negative nominal degree
/// means "use the actual degree".
template <typename Scalar>
struct CoverFunction {
  std::vector<Scalar> lambda;
  std::vector<int> ord;
  Poly<Scalar> p0;
  Poly<Scalar> pinf;
  int r = 2;
  int deg0 = -1;
  int deg_inf = -1;

  int m() const { return static_cast<int>(lambda.size()); }
  int nominal_deg0() const { return deg0 >= 0 ? deg0 : std::max(p0.degree(), 0); }
  int nominal_deg_inf() const { return deg_inf >= 0 ? deg_inf : std::max(pinf.degree(), 0); }

  /// Leading-order balance of h' at infinity: zero exactly when the degree of
  /// the numerator matches the denominator, which makes the top coefficient
  /// of psi cancel identically.
  long long balance() const {
    long long s = 0;
    for (int o : ord) s += o;
    return s + static_cast<long long>(r) * (nominal_deg0() - nominal_deg_inf());
  }

  /// Expected number of moving ramification points counted with weight
  /// b_j - 1; equals the generic degree of psi.
  int expected_b() const {
    int full = m() - 1 + nominal_deg0() + nominal_deg_inf();
    return balance() == 0 ? full - 1 : full;
  }
};

struct UCheck {
  bool ok = true;
  std::vector<std::string> reasons;

  void fail(std::string reason) {
    ok = false;
    reasons.push_back(std::move(reason));
  }
};

struct BranchPoint {
  Complex point;             // meaningful when !at_infinity
  int index = 2;             // ramification index, >= 2
  bool at_infinity = false;  // ramification of h' at x = infinity
};

struct BranchProfile {
  std::vector<BranchPoint> entries;
  /// Set when the cover function is outside U, in which case the profile may
  /// contain extraneous roots at the fixed data.
  bool extraneous_possible = false;
};

namespace detail {

template <typename Scalar>
Poly<Scalar> lambda_product(const std::vector<Scalar>& lambda) {
  return Poly<Scalar>::from_roots(lambda);
}

/// A(x) = sum_i ord_i * prod_{j != i} (x - lambda_j).
template <typename Scalar>
Poly<Scalar> weighted_lambda_sum(const std::vector<Scalar>& lambda, const std::vector<int>& ord) {
  Poly<Scalar> acc;
  for (size_t i = 0; i < lambda.size(); ++i) {
    Poly<Scalar> term = Poly<Scalar>::constant(Scalar(ord[i]));
    for (size_t j = 0; j < lambda.size(); ++j)
      if (j != i) term = term * Poly<Scalar>({Scalar(0) - lambda[j], Scalar(1)});
    acc = acc + term;
  }
  return acc;
}

}  // namespace detail

/// The ramification polynomial
///   psi = sum_i ord_i * prod_{j!=i}(x-lambda_j) * P0 * Pinf
///         + r * prod_i(x-lambda_i) * (P0' Pinf - P0 Pinf').
/// Exact over the rationals; the same formula evaluates in the complex
/// domain for solver use.
template <typename Scalar>
Poly<Scalar> build_psi(const CoverFunction<Scalar>& cf) {
  Poly<Scalar> a = detail::weighted_lambda_sum(cf.lambda, cf.ord);
  Poly<Scalar> b = Poly<Scalar>::constant(Scalar(cf.r)) * detail::lambda_product(cf.lambda);
  return a * cf.p0 * cf.pinf + b * (derivative(cf.p0) * cf.pinf - cf.p0 * derivative(cf.pinf));
}

/// prod_{l in L} R_l(x)^l for the given factor map.
template <typename Scalar>
Poly<Scalar> build_rho(const std::map<int, Poly<Scalar>>& factors) {
  Poly<Scalar> acc = Poly<Scalar>::constant(Scalar(1));
  for (const auto& [ell, poly] : factors) acc = acc * pow(poly, ell);
  return acc;
}

/// Exact membership test for the open set U: P0, Pinf share no roots, avoid
/// every lambda_i, and are squarefree, with x = infinity treated as a
/// possible root via the nominal degrees.
UCheck in_U(const CoverFunction<Rational>& cf);

/// Numeric counterpart used on solver output. separation is the minimum
/// distance below which two roots count as equal; degree_tol is the relative
/// threshold below which a top coefficient counts as vanishing.
UCheck in_U(const CoverFunction<Complex>& cf, double separation = 1e-6, double degree_tol = 1e-8);

/// psi as a raw coefficient vector of length expected_b() + 1. When the
/// balance holds the identically-vanishing top coefficient is dropped, so the
/// vector is exactly the coefficient list of psi in its natural degree bound.
std::vector<Complex> psi_coefficients(const CoverFunction<Complex>& cf);

/// Moving ramification profile of the cover: clusters the roots of psi,
/// discards those at the fixed data (lambda_i, roots of P0/Pinf), and maps a
/// multiplicity-mu cluster to ramification index mu + 1. A degree drop of
/// psi below expected_b() is recorded as ramification at x = infinity.
BranchProfile branch_profile(const CoverFunction<Complex>& cf, double cluster_radius,
                             Precision prec = Precision::kDouble);

/// Convenience overload: evaluate an exact cover function in the complex
/// domain first.
BranchProfile branch_profile(const CoverFunction<Rational>& cf, double cluster_radius,
                             Precision prec = Precision::kDouble);

CoverFunction<Complex> to_complex_cover(const CoverFunction<Rational>& cf);

/// h'(x) at a point away from zeros and poles.
Complex eval_cover(const CoverFunction<Complex>& cf, const Complex& x);
Rational eval_cover(const CoverFunction<Rational>& cf, const Rational& x);

/// (h')'(x) evaluated via the logarithmic derivative; exact in the rational
/// domain.
Complex eval_cover_derivative(const CoverFunction<Complex>& cf, const Complex& x);
Rational eval_cover_derivative(const CoverFunction<Rational>& cf, const Rational& x);

}  // namespace covercount
