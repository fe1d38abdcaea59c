#include "covercount/solver.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <thread>

#include "covercount/rng.hpp"

namespace covercount {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr double kInitStep = 0.05;
constexpr double kMaxStep = 0.1;
constexpr double kMinStep = 1e-10;
constexpr int kCorrectorIters = 3;
constexpr double kCorrectorTol = 1e-8;
constexpr int kSuccessesBeforeIncrease = 4;
constexpr int kFinalNewtonIters = 50;
constexpr long kMaxTotalPaths = 5'000'000;  // desk-scale guard

VectorXcd conv(const VectorXcd& a, const VectorXcd& b) {
  VectorXcd c = VectorXcd::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) c(i + j) += a(i) * b(j);
  return c;
}

VectorXcd padded_add(const VectorXcd& a, const VectorXcd& b) {
  VectorXcd c = VectorXcd::Zero(std::max(a.size(), b.size()));
  c.head(a.size()) = a;
  c.head(b.size()) += b;
  return c;
}

VectorXcd padded_sub(const VectorXcd& a, const VectorXcd& b) {
  VectorXcd c = VectorXcd::Zero(std::max(a.size(), b.size()));
  c.head(a.size()) = a;
  c.head(b.size()) -= b;
  return c;
}

/// Coefficient vector of the formal derivative; length-1 zero vector for
/// constants so convolutions keep their shapes.
VectorXcd deriv_vec(const VectorXcd& p) {
  if (p.size() <= 1) return VectorXcd::Zero(1);
  VectorXcd d(p.size() - 1);
  for (Eigen::Index i = 1; i < p.size(); ++i) d(i - 1) = double(i) * p(i);
  return d;
}

struct Blocks {
  VectorXcd p0, pinf, mu_unused;
  std::vector<VectorXcd> rs;
  Complex mu;
};

Blocks split(const PolySystem& sys, const VectorXcd& x) {
  const BlockLayout& L = sys.layout;
  Blocks b;
  b.p0 = x.segment(L.p0_offset, L.p0_size);
  b.pinf = x.segment(L.pinf_offset, L.pinf_size);
  for (size_t i = 0; i < L.ells.size(); ++i)
    b.rs.push_back(x.segment(L.r_offset[i], L.r_size[i]));
  b.mu = x(L.mu_index);
  return b;
}

/// rho = prod R_l^l and the per-factor partial products R_l^{l-1} *
/// prod_{l' != l} R_{l'}^{l'} used by the Jacobian.
void rho_products(const PolySystem& sys, const Blocks& b, VectorXcd& rho,
                  std::vector<VectorXcd>* partials) {
  const auto& ells = sys.layout.ells;
  std::vector<VectorXcd> powers(ells.size());  // R_l^l
  std::vector<VectorXcd> powers_m1(ells.size());
  for (size_t i = 0; i < ells.size(); ++i) {
    VectorXcd acc = VectorXcd::Ones(1);
    for (int e = 0; e < ells[i] - 1; ++e) acc = conv(acc, b.rs[i]);
    powers_m1[i] = acc;
    powers[i] = conv(acc, b.rs[i]);
  }
  rho = VectorXcd::Ones(1);
  for (const auto& p : powers) rho = conv(rho, p);
  if (partials) {
    partials->clear();
    for (size_t i = 0; i < ells.size(); ++i) {
      VectorXcd acc = powers_m1[i];
      for (size_t j = 0; j < ells.size(); ++j)
        if (j != i) acc = conv(acc, powers[j]);
      partials->push_back(acc);
    }
  }
}

VectorXcd eval_system(const PolySystem& sys, const VectorXcd& x) {
  const BlockLayout& L = sys.layout;
  Blocks b = split(sys, x);
  VectorXcd d0 = deriv_vec(b.p0), dinf = deriv_vec(b.pinf);
  VectorXcd part1 = conv(sys.acoef, conv(b.p0, b.pinf));
  VectorXcd part2 = conv(sys.bcoef, padded_sub(conv(d0, b.pinf), conv(b.p0, dinf)));
  VectorXcd psi = padded_add(part1, part2);
  VectorXcd rho;
  rho_products(sys, b, rho, nullptr);

  VectorXcd f = VectorXcd::Zero(L.n_unknowns);
  for (int e = 0; e < L.n_matching; ++e) {
    Complex pe = e < psi.size() ? psi(e) : Complex(0);
    Complex re = e < rho.size() ? rho(e) : Complex(0);
    f(e) = pe - b.mu * re;
  }
  int row = L.n_matching;
  // Plain (non-conjugated) linear functionals keep the system holomorphic.
  f(row) = (sys.normals[0].transpose() * b.p0).value() - Complex(1);
  f(row + 1) = (sys.normals[1].transpose() * b.pinf).value() - Complex(1);
  for (size_t i = 0; i < L.ells.size(); ++i)
    f(row + 2 + static_cast<int>(i)) =
        (sys.normals[2 + i].transpose() * b.rs[i]).value() - Complex(1);
  return f;
}

MatrixXcd eval_jacobian(const PolySystem& sys, const VectorXcd& x) {
  const BlockLayout& L = sys.layout;
  Blocks b = split(sys, x);
  VectorXcd d0 = deriv_vec(b.p0), dinf = deriv_vec(b.pinf);
  VectorXcd a_pinf = conv(sys.acoef, b.pinf);
  VectorXcd a_p0 = conv(sys.acoef, b.p0);
  VectorXcd b_pinf = conv(sys.bcoef, b.pinf);
  VectorXcd b_p0 = conv(sys.bcoef, b.p0);
  VectorXcd b_dinf = conv(sys.bcoef, dinf);
  VectorXcd b_d0 = conv(sys.bcoef, d0);
  VectorXcd rho;
  std::vector<VectorXcd> partials;
  rho_products(sys, b, rho, &partials);

  MatrixXcd J = MatrixXcd::Zero(L.n_unknowns, L.n_unknowns);
  const int ne = L.n_matching;

  auto fill_column = [&](int col, const VectorXcd& v, int shift, const Complex& factor) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      Eigen::Index e = i + shift;
      if (e >= 0 && e < ne) J(e, col) += factor * v(i);
    }
  };

  for (int c = 0; c < L.p0_size; ++c) {
    int col = L.p0_offset + c;
    fill_column(col, a_pinf, c, Complex(1));
    if (c >= 1) fill_column(col, b_pinf, c - 1, Complex(c));
    fill_column(col, b_dinf, c, Complex(-1));
  }
  for (int c = 0; c < L.pinf_size; ++c) {
    int col = L.pinf_offset + c;
    fill_column(col, a_p0, c, Complex(1));
    fill_column(col, b_d0, c, Complex(1));
    if (c >= 1) fill_column(col, b_p0, c - 1, Complex(-c));
  }
  for (size_t i = 0; i < L.ells.size(); ++i) {
    Complex factor = -b.mu * Complex(L.ells[i]);
    for (int c = 0; c < L.r_size[i]; ++c) fill_column(L.r_offset[i] + c, partials[i], c, factor);
  }
  for (int e = 0; e < ne; ++e)
    if (e < rho.size()) J(e, L.mu_index) = -rho(e);

  int row = ne;
  for (int c = 0; c < L.p0_size; ++c) J(row, L.p0_offset + c) = sys.normals[0](c);
  for (int c = 0; c < L.pinf_size; ++c) J(row + 1, L.pinf_offset + c) = sys.normals[1](c);
  for (size_t i = 0; i < L.ells.size(); ++i)
    for (int c = 0; c < L.r_size[i]; ++c)
      J(row + 2 + static_cast<int>(i), L.r_offset[i] + c) = sys.normals[2 + i](c);
  return J;
}

int equation_degree(const PolySystem& sys, int eq) {
  return eq < sys.layout.n_matching ? sys.match_degree : 1;
}

VectorXcd start_point(const PolySystem& sys, long path) {
  const int n = sys.layout.n_unknowns;
  const int d = sys.match_degree;
  VectorXcd x = VectorXcd::Ones(n);
  long rem = path;
  for (int j = 0; j < sys.layout.n_matching; ++j) {
    int digit = static_cast<int>(rem % d);
    rem /= d;
    double theta = 2.0 * std::numbers::pi * digit / d;
    x(j) = Complex(std::cos(theta), std::sin(theta));
  }
  return x;
}

VectorXcd eval_start(const PolySystem& sys, const VectorXcd& x) {
  const int n = sys.layout.n_unknowns;
  VectorXcd g(n);
  for (int j = 0; j < n; ++j) {
    int d = equation_degree(sys, j);
    Complex p = std::pow(x(j), d);
    g(j) = p - Complex(1);
  }
  return g;
}

struct Homotopy {
  const PolySystem& sys;

  VectorXcd value(const VectorXcd& x, double t) const {
    return (1.0 - t) * sys.gamma * eval_start(sys, x) + t * eval_system(sys, x);
  }
  VectorXcd dt(const VectorXcd& x) const {
    return eval_system(sys, x) - sys.gamma * eval_start(sys, x);
  }
  MatrixXcd dx(const VectorXcd& x, double t) const {
    MatrixXcd J = t * eval_jacobian(sys, x);
    Complex s = (1.0 - t) * sys.gamma;
    for (int j = 0; j < sys.layout.n_unknowns; ++j) {
      int d = equation_degree(sys, j);
      J(j, j) += s * double(d) * std::pow(x(j), d - 1);
    }
    return J;
  }
};

enum class PathStatus { kConverged, kDiverged, kFailed, kBudget };

struct PathResult {
  PathStatus status = PathStatus::kFailed;
  VectorXcd x;
  double residual = 0;
};

PathResult track_path(const PolySystem& sys, const ToleranceSet& params, long path) {
  Homotopy h{sys};
  VectorXcd x = start_point(sys, path);
  double t = 0.0, dt = kInitStep;
  int successes = 0;
  long steps = 0;

  auto davidenko = [&](const VectorXcd& xx, double tt) -> VectorXcd {
    return h.dx(xx, tt).partialPivLu().solve(-h.dt(xx));
  };

  while (1.0 - t > 1e-14) {
    if (++steps > params.step_budget) return {PathStatus::kBudget, x, 0};
    double step = std::min(dt, 1.0 - t);

    VectorXcd k1 = davidenko(x, t);
    VectorXcd k2 = davidenko(x + 0.5 * step * k1, t + 0.5 * step);
    VectorXcd k3 = davidenko(x + 0.5 * step * k2, t + 0.5 * step);
    VectorXcd k4 = davidenko(x + step * k3, t + step);
    VectorXcd xp = x + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    double tn = t + step;
    bool ok = xp.allFinite();
    if (ok) {
      bool corrected = false;
      for (int it = 0; it < kCorrectorIters; ++it) {
        VectorXcd dxn = h.dx(xp, tn).partialPivLu().solve(-h.value(xp, tn));
        if (!dxn.allFinite()) break;
        xp += dxn;
        if (dxn.norm() <= kCorrectorTol * std::max(1.0, xp.norm())) {
          corrected = true;
          break;
        }
      }
      ok = corrected && xp.allFinite();
    }

    if (ok) {
      x = xp;
      t = tn;
      if (x.lpNorm<Eigen::Infinity>() > params.divergence_norm)
        return {PathStatus::kDiverged, x, 0};
      if (++successes >= kSuccessesBeforeIncrease) {
        dt = std::min(dt * 2.0, kMaxStep);
        successes = 0;
      }
    } else {
      dt *= 0.5;
      successes = 0;
      if (dt < kMinStep) return {PathStatus::kFailed, x, 0};
    }
  }

  // Endpoint refinement on the target system.
  double res = 0;
  for (int it = 0; it < kFinalNewtonIters; ++it) {
    VectorXcd f = eval_system(sys, x);
    res = f.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(res)) return {PathStatus::kFailed, x, res};
    if (res < params.residual_tol) return {PathStatus::kConverged, x, res};
    VectorXcd dxn = eval_jacobian(sys, x).partialPivLu().solve(-f);
    if (!dxn.allFinite()) return {PathStatus::kFailed, x, res};
    x += dxn;
    if (x.lpNorm<Eigen::Infinity>() > params.divergence_norm) return {PathStatus::kDiverged, x, res};
  }
  VectorXcd f = eval_system(sys, x);
  res = f.lpNorm<Eigen::Infinity>();
  if (std::isfinite(res) && res < params.residual_tol) return {PathStatus::kConverged, x, res};
  return {PathStatus::kFailed, x, res};
}

bool lex_less(const VectorXcd& a, const VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
  return derive_seed(base_seed, static_cast<std::uint64_t>(trial));
}

PolySystem build_system(const ProblemSpec& spec, std::uint64_t seed) {
  ValidationResult val = validate_problem(spec);
  if (!val.ok)
    throw InvalidSpec("build_system: spec invalid: " +
                      (val.violations.empty() ? std::string("unknown") : val.violations.front().message));
  PolySystem sys;
  sys.spec = spec;
  sys.spec.B = spec.B;
  std::sort(sys.spec.B.begin(), sys.spec.B.end());
  sys.derived = *val.derived;
  sys.seed = seed;

  const int r = spec.base.r;
  const int m = spec.base.m();

  BlockLayout& L = sys.layout;
  L.p0_offset = 0;
  L.p0_size = spec.t0 / r + 1;
  L.pinf_offset = L.p0_size;
  L.pinf_size = spec.tinf / r + 1;
  int off = L.pinf_offset + L.pinf_size;
  L.ells = sys.derived.L;
  for (size_t i = 0; i < L.ells.size(); ++i) {
    L.r_offset.push_back(off);
    L.r_size.push_back(sys.derived.c[i] + 1);
    off += sys.derived.c[i] + 1;
  }
  L.mu_index = off;
  L.n_unknowns = off + 1;
  L.n_matching = sys.derived.b + 1;
  L.n_blocks = 2 + static_cast<int>(L.ells.size());
  if (L.n_unknowns != L.n_matching + L.n_blocks)
    throw Error("build_system: system is not square");

  int sum_ells = 0;
  for (int e : L.ells) sum_ells += e;
  sys.match_degree = std::max(2, 1 + sum_ells);
  long paths = 1;
  for (int e = 0; e < L.n_matching; ++e) {
    paths *= sys.match_degree;
    if (paths > kMaxTotalPaths)
      throw TrackingBudgetExceeded("build_system: total-degree path count exceeds desk-scale budget");
  }
  sys.total_paths = paths;

  // Sampling order is part of the reproducibility contract: lambda first
  // (with rejection), then gamma, then one functional per block.
  Rng rng(seed);
  sys.lambda.clear();
  for (int i = 0; i < m; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw Error("build_system: lambda sampling failed");
      Complex cand = rng.annulus(0.5, 2.0);
      bool clear = true;
      for (const auto& prev : sys.lambda)
        if (std::abs(cand - prev) < 1e-2) {
          clear = false;
          break;
        }
      if (clear) {
        sys.lambda.push_back(cand);
        break;
      }
    }
  }
  sys.gamma = rng.unit_complex();
  auto draw_normal = [&rng](int size) {
    Eigen::VectorXcd v(size);
    for (int i = 0; i < size; ++i) v(i) = rng.gaussian();
    v /= v.norm();
    return v;
  };
  sys.normals.push_back(draw_normal(L.p0_size));
  sys.normals.push_back(draw_normal(L.pinf_size));
  for (size_t i = 0; i < L.ells.size(); ++i) sys.normals.push_back(draw_normal(L.r_size[i]));

  Poly<Complex> a = detail::weighted_lambda_sum(sys.lambda, spec.ord);
  Poly<Complex> bp = Poly<Complex>::constant(Complex(r)) * detail::lambda_product(sys.lambda);
  sys.acoef = VectorXcd::Zero(m);
  for (int i = 0; i < m; ++i) sys.acoef(i) = a.coeff(i);
  sys.bcoef = VectorXcd::Zero(m + 1);
  for (int i = 0; i <= m; ++i) sys.bcoef(i) = bp.coeff(i);
  return sys;
}

RawSolutions solve_total_degree(const PolySystem& sys, const ToleranceSet& params) {
  // Symbolic precheck: the coefficients of psi above degree b must vanish
  // identically, which is exactly the leading-order balance.
  long long balance = 0;
  for (int o : sys.spec.ord) balance += o;
  balance += static_cast<long long>(sys.spec.base.r) * ((sys.layout.p0_size - 1) - (sys.layout.pinf_size - 1));
  if (balance != 0)
    throw InvalidSpec("solve_total_degree: unbalanced system, psi top coefficient does not cancel");

  const long paths = sys.total_paths;
  std::vector<PathResult> results(static_cast<size_t>(paths));

  int threads = std::max(1, params.threads);
  if (threads == 1) {
    for (long p = 0; p < paths; ++p) results[static_cast<size_t>(p)] = track_path(sys, params, p);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (long p = w; p < paths; p += threads)
          results[static_cast<size_t>(p)] = track_path(sys, params, p);
      });
    }
    for (auto& th : pool) th.join();
  }

  RawSolutions out;
  out.stats.tracked = paths;
  for (long p = 0; p < paths; ++p) {
    const PathResult& pr = results[static_cast<size_t>(p)];
    switch (pr.status) {
      case PathStatus::kConverged:
        out.solutions.push_back(pr.x);
        break;
      case PathStatus::kDiverged:
        ++out.stats.diverged;
        break;
      case PathStatus::kFailed:
        ++out.stats.failed;
        break;
      case PathStatus::kBudget:
        throw TrackingBudgetExceeded("solve_total_degree: path exceeded the step budget");
    }
  }
  return out;
}

Eigen::VectorXcd system_residual(const PolySystem& sys, const Eigen::VectorXcd& x) {
  return eval_system(sys, x);
}

Eigen::MatrixXcd system_jacobian(const PolySystem& sys, const Eigen::VectorXcd& x) {
  return eval_jacobian(sys, x);
}

Eigen::MatrixXcd chart_jacobian(const PolySystem& sys, const Eigen::VectorXcd& canonical) {
  const BlockLayout& L = sys.layout;
  MatrixXcd full = eval_jacobian(sys, canonical);
  std::vector<int> pinned;
  auto pin_of = [&canonical](int offset, int size) {
    int arg = 0;
    double best = -1;
    for (int i = 0; i < size; ++i) {
      double mag = std::abs(canonical(offset + i));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    return offset + arg;
  };
  pinned.push_back(pin_of(L.p0_offset, L.p0_size));
  pinned.push_back(pin_of(L.pinf_offset, L.pinf_size));
  for (size_t i = 0; i < L.ells.size(); ++i) pinned.push_back(pin_of(L.r_offset[i], L.r_size[i]));

  std::vector<int> cols;
  for (int c = 0; c < L.n_unknowns; ++c)
    if (std::find(pinned.begin(), pinned.end(), c) == pinned.end()) cols.push_back(c);

  MatrixXcd J(L.n_matching, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) J.col(static_cast<int>(c)) = full.col(cols[c]).head(L.n_matching);
  return J;
}

Eigen::VectorXcd canonical_coordinates(const PolySystem& sys, const Eigen::VectorXcd& x) {
  const BlockLayout& L = sys.layout;
  VectorXcd out = x;
  auto scale_block = [&out](int offset, int size) {
    int arg = 0;
    double best = -1;
    for (int i = 0; i < size; ++i) {
      double mag = std::abs(out(offset + i));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    Complex alpha = out(offset + arg);
    for (int i = 0; i < size; ++i) out(offset + i) /= alpha;
    return alpha;
  };
  Complex a0 = scale_block(L.p0_offset, L.p0_size);
  Complex ainf = scale_block(L.pinf_offset, L.pinf_size);
  Complex rfactor(1);
  for (size_t i = 0; i < L.ells.size(); ++i) {
    Complex al = scale_block(L.r_offset[i], L.r_size[i]);
    for (int e = 0; e < L.ells[i]; ++e) rfactor *= al;
  }
  out(L.mu_index) = x(L.mu_index) * rfactor / (a0 * ainf);
  return out;
}

CoverFunction<Complex> solution_cover(const PolySystem& sys, const Eigen::VectorXcd& x) {
  const BlockLayout& L = sys.layout;
  CoverFunction<Complex> cf;
  cf.lambda = sys.lambda;
  cf.ord = sys.spec.ord;
  cf.r = sys.spec.base.r;
  cf.deg0 = L.p0_size - 1;
  cf.deg_inf = L.pinf_size - 1;
  std::vector<Complex> c0(static_cast<size_t>(L.p0_size));
  for (int i = 0; i < L.p0_size; ++i) c0[static_cast<size_t>(i)] = x(L.p0_offset + i);
  std::vector<Complex> ci(static_cast<size_t>(L.pinf_size));
  for (int i = 0; i < L.pinf_size; ++i) ci[static_cast<size_t>(i)] = x(L.pinf_offset + i);
  cf.p0 = Poly<Complex>(std::move(c0));
  cf.pinf = Poly<Complex>(std::move(ci));
  return cf;
}

FilterOutcome filter_solutions(const std::vector<Eigen::VectorXcd>& raw, const PolySystem& sys,
                               const ToleranceSet& params) {
  FilterOutcome out;
  const size_t n = raw.size();
  if (n == 0) return out;

  std::vector<VectorXcd> canon(n);
  for (size_t i = 0; i < n; ++i) canon[i] = canonical_coordinates(sys, raw[i]);

  // Deterministic processing order independent of path scheduling.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lex_less(canon[a], canon[b]); });

  // Single-link clustering over the projective block entries (mu is derived
  // data and can be large, so it is excluded from the metric).
  const int mu = sys.layout.mu_index;
  auto block_dist = [&](const VectorXcd& a, const VectorXcd& b) {
    double dist = 0;
    for (int i = 0; i < a.size(); ++i) {
      if (i == mu) continue;
      dist = std::max(dist, std::abs(a(i) - b(i)));
    }
    return dist;
  };
  std::vector<int> cluster(n, -1);
  int nclusters = 0;
  std::vector<size_t> representative;
  for (size_t oi = 0; oi < n; ++oi) {
    size_t i = order[oi];
    for (size_t oj = 0; oj < oi; ++oj) {
      size_t j = order[oj];
      if (block_dist(canon[i], canon[j]) <= params.dedup_radius) {
        cluster[i] = cluster[j];
        break;
      }
    }
    if (cluster[i] < 0) {
      cluster[i] = nclusters++;
      representative.push_back(i);
    } else {
      ++out.rejected_duplicate;
    }
  }

  for (size_t rep : representative) {
    CoverFunction<Complex> cover = solution_cover(sys, canon[rep]);

    UCheck u = in_U(cover, params.cluster_radius);
    if (!u.ok) {
      ++out.rejected_outside_u;
      continue;
    }

    BranchProfile profile;
    try {
      profile = branch_profile(cover, params.cluster_radius, params.precision);
    } catch (const PrecisionExhausted&) {
      if (params.precision == Precision::kExtended) throw;
      profile = branch_profile(cover, params.cluster_radius, Precision::kExtended);
    }

    bool matches = !profile.extraneous_possible;
    std::vector<int> indices;
    for (const auto& bp : profile.entries) {
      if (bp.at_infinity) matches = false;
      indices.push_back(bp.index);
    }
    std::sort(indices.begin(), indices.end());
    if (indices != sys.spec.B) matches = false;
    if (matches) {
      // Moving branch points must lie in distinct fibers.
      std::vector<Complex> images;
      double scale = 1.0;
      for (const auto& bp : profile.entries) {
        Complex img = eval_cover(cover, bp.point);
        images.push_back(img);
        scale = std::max(scale, std::abs(img));
      }
      for (size_t a = 0; a < images.size() && matches; ++a)
        for (size_t b = a + 1; b < images.size(); ++b)
          if (std::abs(images[a] - images[b]) <= params.cluster_radius * scale) {
            matches = false;
            break;
          }
    }
    if (!matches) {
      ++out.rejected_profile;
      continue;
    }

    VectorXcd f = eval_system(sys, raw[rep]);
    MatrixXcd J = chart_jacobian(sys, canon[rep]);
    Eigen::JacobiSVD<MatrixXcd> svd(J);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    double rcond = smax > 0 ? smin / smax : 0.0;
    if (rcond < params.singular_tol) {
      ++out.rejected_singular;
      continue;
    }

    AcceptedSolution acc;
    acc.raw = raw[rep];
    acc.canonical = canon[rep];
    acc.cover = std::move(cover);
    acc.residual = f.lpNorm<Eigen::Infinity>();
    acc.rcond = rcond;
    out.accepted.push_back(std::move(acc));
  }
  return out;
}

std::vector<VerifyReport> verify_count(const ProblemSpec& spec, int trials, std::uint64_t seed,
                                       const ToleranceSet& params) {
  CountBreakdown breakdown = cover_count(spec);
  std::string hash = fnv1a64_hex(canonical_spec_string(spec));

  std::vector<VerifyReport> reports;
  for (int trial = 0; trial < trials; ++trial) {
    VerifyReport rep;
    rep.spec_hash = hash;
    rep.seed = trial_seed(seed, trial);
    rep.expected = breakdown.total;
    rep.params = params;
    auto t0 = std::chrono::steady_clock::now();
    try {
      PolySystem sys = build_system(spec, rep.seed);
      rep.lambda = sys.lambda;
      RawSolutions raw = solve_total_degree(sys, params);
      rep.paths_tracked = raw.stats.tracked;
      rep.paths_diverged = raw.stats.diverged;
      rep.paths_failed = raw.stats.failed;
      rep.raw_solutions = static_cast<long>(raw.solutions.size());
      FilterOutcome filt = filter_solutions(raw.solutions, sys, params);
      rep.rejected_outside_u = filt.rejected_outside_u;
      rep.rejected_profile = filt.rejected_profile;
      rep.rejected_duplicate = filt.rejected_duplicate;
      rep.rejected_singular = filt.rejected_singular;
      rep.accepted = static_cast<long>(filt.accepted.size());
      for (const auto& acc : filt.accepted) {
        rep.max_residual = std::max(rep.max_residual, acc.residual);
        rep.min_rcond = rep.min_rcond == 0 ? acc.rcond : std::min(rep.min_rcond, acc.rcond);
      }
      rep.pass = (BigInt(rep.accepted) == rep.expected);
    } catch (const Error& e) {
      rep.error = e.what();
      rep.pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace covercount
