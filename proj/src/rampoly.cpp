#include "covercount/rampoly.hpp"

#include <algorithm>

namespace covercount {

namespace {

template <typename Scalar>
Scalar int_pow(const Scalar& base, int e) {
  Scalar acc(1), b = base;
  for (int n = std::abs(e); n > 0; n >>= 1) {
    if (n & 1) acc = acc * b;
    if (n > 1) b = b * b;
  }
  if (e < 0) return Scalar(1) / acc;
  return acc;
}

template <typename Scalar>
Scalar eval_cover_impl(const CoverFunction<Scalar>& cf, const Scalar& x) {
  Scalar acc(1);
  for (size_t i = 0; i < cf.lambda.size(); ++i) {
    Scalar diff = x - cf.lambda[i];
    acc = acc * int_pow(diff, cf.ord[i]);
  }
  Scalar ratio = cf.p0(x) / cf.pinf(x);
  return acc * int_pow(ratio, cf.r);
}

template <typename Scalar>
Scalar eval_cover_derivative_impl(const CoverFunction<Scalar>& cf, const Scalar& x) {
  Scalar logd(0);
  for (size_t i = 0; i < cf.lambda.size(); ++i) {
    Scalar diff = x - cf.lambda[i];
    logd = logd + Scalar(cf.ord[i]) / diff;
  }
  Scalar dp0 = derivative(cf.p0)(x), dpinf = derivative(cf.pinf)(x);
  Scalar v0 = cf.p0(x), vinf = cf.pinf(x);
  logd = logd + Scalar(cf.r) * (dp0 / v0 - dpinf / vinf);
  Scalar value = eval_cover_impl(cf, x);
  return value * logd;
}

}  // namespace

UCheck in_U(const CoverFunction<Rational>& cf) {
  UCheck out;
  if (cf.p0.is_zero() || cf.pinf.is_zero()) {
    out.fail("P0 or Pinf is the zero polynomial");
    return out;
  }
  if (gcd(cf.p0, cf.pinf).degree() > 0) out.fail("P0 and Pinf share a root");
  for (size_t i = 0; i < cf.lambda.size(); ++i) {
    if (cf.p0(cf.lambda[i]) == 0) out.fail("P0 vanishes at a lambda_i");
    if (cf.pinf(cf.lambda[i]) == 0) out.fail("Pinf vanishes at a lambda_i");
  }
  if (cf.p0.degree() > 0 && gcd(cf.p0, derivative(cf.p0)).degree() > 0) out.fail("P0 has a double root");
  if (cf.pinf.degree() > 0 && gcd(cf.pinf, derivative(cf.pinf)).degree() > 0)
    out.fail("Pinf has a double root");

  const int n0 = cf.nominal_deg0(), ninf = cf.nominal_deg_inf();
  const bool drop0 = cf.p0.coeff(n0) == 0;        // root at infinity
  const bool dropinf = cf.pinf.coeff(ninf) == 0;
  if (drop0 && dropinf) out.fail("P0 and Pinf share a root at infinity");
  if (n0 >= 1 && drop0 && cf.p0.coeff(n0 - 1) == 0) out.fail("P0 has a double root at infinity");
  if (ninf >= 1 && dropinf && cf.pinf.coeff(ninf - 1) == 0)
    out.fail("Pinf has a double root at infinity");
  return out;
}

UCheck in_U(const CoverFunction<Complex>& cf, double separation, double degree_tol) {
  UCheck out;
  if (cf.p0.is_zero() || cf.pinf.is_zero()) {
    out.fail("P0 or Pinf is the zero polynomial");
    return out;
  }

  auto max_abs = [](const Poly<Complex>& p) {
    double m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
  };

  // Numeric degree relative to the largest coefficient; everything above it
  // counts as a root at infinity.
  auto numeric_degree = [&](const Poly<Complex>& p, int nominal) {
    double scale = max_abs(p);
    int deg = -1;
    for (int i = std::min(nominal, p.degree()); i >= 0; --i) {
      if (std::abs(p.coeff(i)) > degree_tol * scale) {
        deg = i;
        break;
      }
    }
    return deg;
  };

  const int n0 = cf.nominal_deg0(), ninf = cf.nominal_deg_inf();
  const int d0 = numeric_degree(cf.p0, n0);
  const int dinf = numeric_degree(cf.pinf, ninf);
  const int inf_mult0 = n0 - d0, inf_multinf = ninf - dinf;
  if (inf_mult0 >= 1 && inf_multinf >= 1) out.fail("P0 and Pinf share a root at infinity");
  if (inf_mult0 >= 2) out.fail("P0 has a double root at infinity");
  if (inf_multinf >= 2) out.fail("Pinf has a double root at infinity");

  auto finite_roots = [&](const Poly<Complex>& p, int deg) {
    std::vector<Complex> roots;
    if (deg <= 0) return roots;
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().begin() + deg + 1);
    for (const auto& rc : roots_clustered(Poly<Complex>(std::move(c)), separation / 4))
      for (int i = 0; i < rc.multiplicity; ++i) roots.push_back(rc.center);
    return roots;
  };

  std::vector<Complex> roots0 = finite_roots(cf.p0, d0);
  std::vector<Complex> rootsinf = finite_roots(cf.pinf, dinf);

  auto too_close = [&](const Complex& a, const Complex& b) { return std::abs(a - b) <= separation; };
  auto has_pair_within = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (const auto& x : a)
      for (const auto& y : b)
        if (too_close(x, y)) return true;
    return false;
  };
  auto has_self_pair = [&](const std::vector<Complex>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (too_close(v[i], v[j])) return true;
    return false;
  };

  if (has_self_pair(roots0)) out.fail("P0 has a double root");
  if (has_self_pair(rootsinf)) out.fail("Pinf has a double root");
  if (has_pair_within(roots0, rootsinf)) out.fail("P0 and Pinf share a root");
  for (const auto& lam : cf.lambda) {
    for (const auto& a : roots0)
      if (too_close(a, lam)) out.fail("P0 vanishes at a lambda_i");
    for (const auto& b : rootsinf)
      if (too_close(b, lam)) out.fail("Pinf vanishes at a lambda_i");
  }
  return out;
}

std::vector<Complex> psi_coefficients(const CoverFunction<Complex>& cf) {
  Poly<Complex> psi = build_psi(cf);
  const int len = cf.expected_b() + 1;
  std::vector<Complex> out(static_cast<size_t>(len), Complex(0));
  for (int i = 0; i < len; ++i) out[static_cast<size_t>(i)] = psi.coeff(i);
  return out;
}

BranchProfile branch_profile(const CoverFunction<Complex>& cf, double cluster_radius, Precision prec) {
  BranchProfile out;
  out.extraneous_possible = !in_U(cf, cluster_radius).ok;

  std::vector<Complex> coeffs = psi_coefficients(cf);
  const int b_expected = cf.expected_b();

  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) return out;  // psi identically zero cannot happen for spec-consistent data

  int deg = -1;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (std::abs(coeffs[static_cast<size_t>(i)]) > 1e-9 * scale) {
      deg = i;
      break;
    }
  }
  if (deg < 0) return out;

  // Fixed data whose coincidental psi roots do not represent moving
  // ramification.
  std::vector<Complex> excluded = cf.lambda;
  auto add_roots = [&](const Poly<Complex>& p) {
    if (p.degree() <= 0) return;
    for (const auto& rc : roots_clustered(p, cluster_radius, prec)) excluded.push_back(rc.center);
  };
  add_roots(cf.p0);
  add_roots(cf.pinf);

  if (deg > 0) {
    std::vector<Complex> trimmed(coeffs.begin(), coeffs.begin() + deg + 1);
    for (const auto& rc : roots_clustered(Poly<Complex>(std::move(trimmed)), cluster_radius, prec)) {
      bool fixed = false;
      for (const auto& ex : excluded)
        if (std::abs(rc.center - ex) <= cluster_radius) {
          fixed = true;
          break;
        }
      if (!fixed) out.entries.push_back(BranchPoint{rc.center, rc.multiplicity + 1, false});
    }
  }
  if (deg < b_expected)
    out.entries.push_back(BranchPoint{Complex(0, 0), b_expected - deg + 1, true});

  std::sort(out.entries.begin(), out.entries.end(), [](const BranchPoint& a, const BranchPoint& b) {
    if (a.at_infinity != b.at_infinity) return !a.at_infinity;
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
  return out;
}

BranchProfile branch_profile(const CoverFunction<Rational>& cf, double cluster_radius, Precision prec) {
  return branch_profile(to_complex_cover(cf), cluster_radius, prec);
}

CoverFunction<Complex> to_complex_cover(const CoverFunction<Rational>& cf) {
  CoverFunction<Complex> out;
  out.lambda.reserve(cf.lambda.size());
  for (const auto& l : cf.lambda) out.lambda.push_back(to_complex(l));
  out.ord = cf.ord;
  out.p0 = to_complex_poly(cf.p0);
  out.pinf = to_complex_poly(cf.pinf);
  out.r = cf.r;
  out.deg0 = cf.nominal_deg0();
  out.deg_inf = cf.nominal_deg_inf();
  return out;
}

Complex eval_cover(const CoverFunction<Complex>& cf, const Complex& x) { return eval_cover_impl(cf, x); }

Rational eval_cover(const CoverFunction<Rational>& cf, const Rational& x) {
  for (size_t i = 0; i < cf.lambda.size(); ++i)
    if (x == cf.lambda[i] && cf.ord[i] < 0) throw ZeroInput("eval_cover: pole at sample point");
  if (cf.pinf(x) == 0) throw ZeroInput("eval_cover: pole at sample point");
  return eval_cover_impl(cf, x);
}

Complex eval_cover_derivative(const CoverFunction<Complex>& cf, const Complex& x) {
  return eval_cover_derivative_impl(cf, x);
}

Rational eval_cover_derivative(const CoverFunction<Rational>& cf, const Rational& x) {
  for (size_t i = 0; i < cf.lambda.size(); ++i)
    if (x == cf.lambda[i]) throw ZeroInput("eval_cover_derivative: sample point at lambda_i");
  if (cf.p0(x) == 0 || cf.pinf(x) == 0)
    throw ZeroInput("eval_cover_derivative: sample point at a root of P0/Pinf");
  return eval_cover_derivative_impl(cf, x);
}

}  // namespace covercount
