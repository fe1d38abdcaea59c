#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "covercount/count.hpp"
#include "covercount/problem.hpp"
#include "covercount/rampoly.hpp"

namespace covercount {

struct ToleranceSet {
  double residual_tol = 1e-10;     // final Newton residual (infinity norm)
  double dedup_radius = 1e-6;      // clustering radius in canonical coordinates
  double singular_tol = 1e-8;      // minimum reciprocal condition number
  double divergence_norm = 1e8;    // path truncation norm
  long step_budget = 10000;        // predictor attempts per path
  // Root clustering for profiles and U checks. The default dominates the
  // splitting scale of multiplicity <= 4 roots in double precision while
  // staying far below generic branch-point separations.
  double cluster_radius = 1e-4;
  Precision precision = Precision::kDouble;
  int threads = 1;
};

/// Layout of the unknown vector: P0 coefficients, Pinf coefficients, one
/// block per distinct moving multiplicity, then the matching scalar mu.
struct BlockLayout {
  int p0_offset = 0;
  int p0_size = 0;
  int pinf_offset = 0;
  int pinf_size = 0;
  std::vector<int> ells;      // ascending distinct values of b_j - 1
  std::vector<int> r_offset;  // parallel to ells
  std::vector<int> r_size;    // c_l + 1
  int mu_index = 0;
  int n_unknowns = 0;
  int n_matching = 0;  // b + 1 coefficient equations
  int n_blocks = 0;    // projective blocks: 2 + |L|
};

/// The square system: coefficients 0..b of psi(P0, Pinf) - mu * prod R_l^l,
/// plus one random affine normalization per projective block.
struct PolySystem {
  ProblemSpec spec;
  DerivedProblem derived;
  std::uint64_t seed = 0;
  std::vector<Complex> lambda;
  Complex gamma;                            // start-system deformation factor
  std::vector<Eigen::VectorXcd> normals;    // one unit-norm functional per block
  BlockLayout layout;
  Eigen::VectorXcd acoef;                   // sum_i ord_i prod_{j != i}(x - lambda_j)
  Eigen::VectorXcd bcoef;                   // r * prod_i (x - lambda_i)
  int match_degree = 2;                     // total degree of each matching equation
  long total_paths = 0;                     // match_degree ^ n_matching
};

struct PathStats {
  long tracked = 0;
  long diverged = 0;
  long failed = 0;  // corrector floor or non-converged endpoint
};

struct RawSolutions {
  std::vector<Eigen::VectorXcd> solutions;  // Newton-refined, residual below tolerance
  PathStats stats;
};

enum class RejectReason { kOutsideU, kProfileMismatch, kDuplicate, kSingularJacobian };

struct AcceptedSolution {
  Eigen::VectorXcd raw;        // satisfies the normalization equations
  Eigen::VectorXcd canonical;  // blocks scaled to leading-entry 1 (argmax)
  CoverFunction<Complex> cover;
  double residual = 0;
  double rcond = 0;
};

struct FilterOutcome {
  std::vector<AcceptedSolution> accepted;
  long rejected_outside_u = 0;
  long rejected_profile = 0;
  long rejected_duplicate = 0;
  long rejected_singular = 0;
};

struct VerifyReport {
  std::string spec_hash;  // FNV-1a of the canonical spec JSON
  std::uint64_t seed = 0;
  std::vector<Complex> lambda;
  long paths_tracked = 0;
  long paths_diverged = 0;
  long paths_failed = 0;
  long raw_solutions = 0;
  long rejected_outside_u = 0;
  long rejected_profile = 0;
  long rejected_duplicate = 0;
  long rejected_singular = 0;
  long accepted = 0;
  BigInt expected;
  double max_residual = 0;  // over accepted solutions
  double min_rcond = 0;     // over accepted solutions
  bool pass = false;
  std::string error;        // nonempty when the trial aborted with a solver error
  ToleranceSet params;
  double wall_ms = 0;       // timing only; excluded from the canonical serialization
};

/// Samples lambda on the annulus 0.5 <= |z| <= 2 (pairwise distance >= 1e-2)
/// from the seeded generator and assembles the square system with random
/// unit-norm normalization functionals. Throws InvalidSpec when the spec
/// fails validation.
PolySystem build_system(const ProblemSpec& spec, std::uint64_t seed);

/// Tracks every total-degree start path under the gamma-deformed homotopy
/// with adaptive predictor-corrector stepping, truncates diverging paths, and
/// Newton-refines survivors. Deterministic for fixed (system, params)
/// regardless of thread count. Throws InvalidSpec when the symbolic balance
/// precheck fails and TrackingBudgetExceeded when a path exhausts its step
/// budget without converging or diverging.
RawSolutions solve_total_degree(const PolySystem& sys, const ToleranceSet& params);

/// Deduplicates raw solutions in canonical coordinates, then rejects
/// candidates outside U, with the wrong branch profile (as a multiset, with
/// distinct finite branch points and distinct images), or with a Jacobian
/// below the conditioning floor.
FilterOutcome filter_solutions(const std::vector<Eigen::VectorXcd>& raw, const PolySystem& sys,
                               const ToleranceSet& params);

/// Full build -> solve -> filter pipeline for `trials` independent lambda
/// samples; each report compares the accepted count with cover_count.
/// Solver errors are captured per-trial.
std::vector<VerifyReport> verify_count(const ProblemSpec& spec, int trials, std::uint64_t seed,
                                       const ToleranceSet& params);

/// Trial seed derivation, exposed for reproducing single trials.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

/// System residual F(x) (infinity norm) and Jacobian utilities, exposed for
/// tests and diagnostics.
Eigen::VectorXcd system_residual(const PolySystem& sys, const Eigen::VectorXcd& x);
Eigen::MatrixXcd system_jacobian(const PolySystem& sys, const Eigen::VectorXcd& x);

/// Square Jacobian of the matching equations in the gauge-fixed chart where
/// the largest-modulus coordinate of each projective block is pinned. Its
/// conditioning measures the transversality of the intersection independent
/// of the random normalization functionals.
Eigen::MatrixXcd chart_jacobian(const PolySystem& sys, const Eigen::VectorXcd& canonical);

/// Gauge-fixed representative: every projective block is divided by its
/// largest-modulus entry and mu is rescaled to keep the matching equations
/// satisfied.
Eigen::VectorXcd canonical_coordinates(const PolySystem& sys, const Eigen::VectorXcd& x);

/// Cover function encoded by a solution vector.
CoverFunction<Complex> solution_cover(const PolySystem& sys, const Eigen::VectorXcd& x);

}  // namespace covercount
