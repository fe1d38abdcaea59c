#include "covercount/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace covercount {

namespace {

template <typename Real>
using Cx = std::complex<Real>;

template <typename Real>
Cx<Real> horner(const std::vector<Cx<Real>>& c, const Cx<Real>& x) {
  Cx<Real> acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <typename Real>
struct Approx {
  Cx<Real> z;
  Real err;  // forward-error estimate from the last Newton step
};

/// Eigenvalues of the companion matrix of the monic normalization, then a few
/// Newton polish steps on the original coefficients. Multiple roots stop
/// improving once the step stagnates; the step length doubles as the error
/// estimate for the cluster decision.
template <typename Real>
std::vector<Approx<Real>> approximate_roots(const std::vector<Cx<Real>>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  using Mat = Eigen::Matrix<Cx<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  Mat companion = Mat::Zero(n, n);
  const Cx<Real> lead = coeffs.back();
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -coeffs[static_cast<size_t>(i)] / lead;
    if (i + 1 < n) companion(i + 1, i) = Cx<Real>(1);
  }
  Eigen::ComplexEigenSolver<Mat> es(companion, /*computeEigenvectors=*/false);

  std::vector<Cx<Real>> dcoeffs(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) dcoeffs[static_cast<size_t>(i - 1)] = Real(i) * coeffs[static_cast<size_t>(i)];

  std::vector<Approx<Real>> out;
  out.reserve(static_cast<size_t>(n));
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int i = 0; i < n; ++i) {
    Cx<Real> z = es.eigenvalues()(i);
    Real step = 0;
    for (int it = 0; it < 12; ++it) {
      Cx<Real> pv = horner(coeffs, z);
      Cx<Real> dv = horner(dcoeffs, z);
      if (std::abs(dv) == Real(0)) break;
      Cx<Real> dz = pv / dv;
      step = std::abs(dz);
      if (step <= eps * (Real(1) + std::abs(z))) {
        z -= dz;
        break;
      }
      Cx<Real> znew = z - dz;
      // Multiple roots: Newton steps stop shrinking near 1/mult convergence;
      // bail out once the iterate stalls.
      if (std::abs(horner(coeffs, znew)) >= std::abs(pv)) break;
      z = znew;
    }
    Real err = std::max(step, eps * (Real(1) + std::abs(z)) * Real(16));
    out.push_back({z, err});
  }
  return out;
}

/// Coefficients of p(x + z), i.e. p^(k)(z)/k! for k = 0..n, by the full
/// Horner scheme.
template <typename Real>
std::vector<Cx<Real>> taylor_coeffs(const std::vector<Cx<Real>>& coeffs, const Cx<Real>& z) {
  std::vector<Cx<Real>> t(coeffs);
  const int n = static_cast<int>(t.size()) - 1;
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j) t[static_cast<size_t>(j)] += z * t[static_cast<size_t>(j + 1)];
  return t;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

template <typename Real>
std::vector<RootCluster> cluster_roots(const std::vector<Cx<Real>>& coeffs, double radius) {
  auto roots = approximate_roots(coeffs);
  const int n = static_cast<int>(roots.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(roots[static_cast<size_t>(i)].z - roots[static_cast<size_t>(j)].z) <= Real(radius))
        uf.unite(i, j);

  std::vector<int> label(static_cast<size_t>(n));
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      label[static_cast<size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(r);
    } else {
      label[static_cast<size_t>(i)] = static_cast<int>(it - reps.begin());
    }
  }

  const int k = static_cast<int>(reps.size());
  std::vector<Cx<Real>> centers(static_cast<size_t>(k), Cx<Real>(0));
  std::vector<int> counts(static_cast<size_t>(k), 0);
  std::vector<Real> errs(static_cast<size_t>(k), Real(0));
  for (int i = 0; i < n; ++i) {
    int l = label[static_cast<size_t>(i)];
    centers[static_cast<size_t>(l)] += roots[static_cast<size_t>(i)].z;
    counts[static_cast<size_t>(l)] += 1;
    errs[static_cast<size_t>(l)] = std::max(errs[static_cast<size_t>(l)], roots[static_cast<size_t>(i)].err);
  }
  for (int l = 0; l < k; ++l) centers[static_cast<size_t>(l)] /= Real(counts[static_cast<size_t>(l)]);

  // Ambiguity: two clusters cannot be certified as distinct when their gap is
  // within the coalescence scale of their union. A mu-fold root perturbed at
  // the coefficient level by eps*S splits by roughly
  // (eps * S / |p^(mu)(z)/mu!|)^(1/mu), so a split at or below that scale is
  // indistinguishable from a single multiple root at this precision.
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real mag = 0;
  for (const auto& c : coeffs) mag = std::max(mag, std::abs(c));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      Real gap = std::abs(centers[static_cast<size_t>(a)] - centers[static_cast<size_t>(b)]);
      Real newton_slack =
          Real(4) * (errs[static_cast<size_t>(a)] + errs[static_cast<size_t>(b)]);
      if (gap <= Real(radius) + newton_slack)
        throw PrecisionExhausted("roots_clustered: cluster separation within error bounds");

      const int mu = counts[static_cast<size_t>(a)] + counts[static_cast<size_t>(b)];
      Cx<Real> zbar = (Real(counts[static_cast<size_t>(a)]) * centers[static_cast<size_t>(a)] +
                       Real(counts[static_cast<size_t>(b)]) * centers[static_cast<size_t>(b)]) /
                      Real(mu);
      std::vector<Cx<Real>> tc = taylor_coeffs(coeffs, zbar);
      Real az = std::abs(zbar);
      Real scale(0), p(1);
      for (const auto& c : coeffs) {
        scale += std::abs(c) * p;
        p *= az;
      }
      Real denom = std::abs(tc[static_cast<size_t>(mu)]);
      Real rho;
      if (denom <= eps * mag) {
        rho = gap + Real(1);  // derivative information exhausted: ambiguous
      } else {
        rho = std::pow(eps * scale / denom, Real(1) / Real(mu));
      }
      if (gap <= Real(4) * rho)
        throw PrecisionExhausted("roots_clustered: split below the coalescence scale");
    }
  }

  std::vector<RootCluster> out;
  out.reserve(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) {
    RootCluster rc;
    rc.center = Complex(static_cast<double>(centers[static_cast<size_t>(l)].real()),
                        static_cast<double>(centers[static_cast<size_t>(l)].imag()));
    rc.multiplicity = counts[static_cast<size_t>(l)];
    rc.residual = static_cast<double>(std::abs(horner(coeffs, centers[static_cast<size_t>(l)])));
    out.push_back(rc);
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

}  // namespace

std::vector<RootCluster> roots_clustered(const ComplexPoly& p, double cluster_radius, Precision prec) {
  if (p.is_zero()) throw ZeroInput("roots_clustered: zero polynomial");
  if (p.degree() == 0) return {};
  if (prec == Precision::kDouble) {
    return cluster_roots<double>(p.coeffs(), cluster_radius);
  }
  std::vector<std::complex<long double>> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.real(), v.imag());
  return cluster_roots<long double>(c, cluster_radius);
}

std::vector<RootCluster> roots_clustered(const RationalPoly& p, double cluster_radius, Precision prec) {
  if (p.is_zero()) throw ZeroInput("roots_clustered: zero polynomial");
  return roots_clustered(to_complex_poly(p), cluster_radius, prec);
}

}  // namespace covercount
