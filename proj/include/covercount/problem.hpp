#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercount/numeric.hpp"

namespace covercount {

/// Base cyclic cover data: order r and the monodromy vector over the m
/// branch points.
struct CyclicData {
  int r = 2;
  std::vector<int> xi;

  int m() const { return static_cast<int>(xi.size()); }
};

/// Quantities derived from CyclicData: local fiber sizes f_i = gcd(xi_i, r),
/// ramification indices e_i = r / f_i, and the source genus.
struct DerivedCyclic {
  std::vector<int> f;
  std::vector<int> e;
  int genus = 0;
};

/// One equivariant counting problem over a base cover. ord_i is the signed
/// order of the zero (> 0) or pole (< 0) of the quotient map at lambda_i;
/// B is the multiset of moving ramification indices (kept sorted ascending);
/// t0 and tinf count unmarked unramified preimages of 0 and infinity.
struct ProblemSpec {
  CyclicData base;
  std::vector<int> ord;
  std::vector<int> B;
  int t0 = 0;
  int tinf = 0;
};

enum class ConstraintTag {
  kStructure,     // shape violations: zero orders, b_j < 2, negative counts
  kBase,          // CyclicData invariants, including the genus relation
  kEq2,           // degree balance over the 0 and infinity fibers
  kEq3,           // k = m - 2
  kEq4,           // Riemann-Hurwitz for the equivariant map
  kEq5,           // t = r * sum(b_j - 2)
  kCongruence,    // ord_i = xi_i (mod r)
  kDivisibility,  // r | t0 and r | tinf
};

std::string to_string(ConstraintTag tag);

struct Violation {
  ConstraintTag tag;
  std::string message;
};

/// Full derived record of a valid problem.
struct DerivedProblem {
  DerivedCyclic cyclic;
  int d = 0;             // degree of the cover
  int t = 0;             // t0 + tinf
  int k = 0;             // number of moving orbits
  int b = 0;             // sum of (b_j - 1), the moving ramification weight
  std::vector<int> ram;  // |ord_i| / f_i, the ramification index upstairs
  std::vector<int> L;    // distinct values of b_j - 1, ascending
  std::vector<int> c;    // counts parallel to L
};

struct ValidationResult {
  bool ok = false;
  std::vector<Violation> violations;
  std::optional<DerivedProblem> derived;
};

/// Formal divisor supported on the hyperelliptic class H and the fixed points
/// P_i; degree counts H with weight 2.
struct FormalDivisor {
  int h_coeff = 0;
  std::vector<int> point_coeffs;

  int degree() const {
    int total = 2 * h_coeff;
    for (int c : point_coeffs) total += c;
    return total;
  }
};

/// Checks the CyclicData invariants; empty result means valid.
std::vector<Violation> validate_cyclic(const CyclicData& base);

/// f_i, e_i and the genus of the cyclic cover. Requires a valid base;
/// throws NonIntegralGenus / NegativeGenus when the genus relation has no
/// admissible solution, InvalidSpec on base invariant violations.
DerivedCyclic derive_invariants(const CyclicData& base);

/// Checks every constraint on the spec and reports all violations; on
/// success the full derived record is attached.
ValidationResult validate_problem(const ProblemSpec& spec);

/// Every valid ProblemSpec over the base with degree at most d_max, ordered
/// lexicographically by (d, ord, sorted B, t0). Exhausts sign patterns and
/// residue-constrained orders bounded by d, deriving t0, tinf and the moving
/// weight from the constraint system; B ranges over the partitions it pins.
std::vector<ProblemSpec> enumerate_problems(const CyclicData& base, int d_max);

/// Exponent data of the unique equivariant lift: (ord_i - xi_i) / r.
/// Throws CongruenceViolated when some difference is not divisible by r.
std::vector<int> lift_exponents(const ProblemSpec& spec);

/// Theta characteristic of an r = 2 equivariant cover with all orders odd
/// and all moving indices 3. Throws HypothesesNotMet otherwise.
FormalDivisor theta_characteristic(const ProblemSpec& spec);

/// Canonical key used for deterministic ordering of specs.
bool spec_less(const ProblemSpec& a, const ProblemSpec& b);

/// The canonical JSON text of a spec, with fixed field order
/// {r, xi, ord, B, t0, tinf} and B sorted ascending. This is the wire format
/// shared with the CLI and the basis for content hashes.
std::string canonical_spec_string(const ProblemSpec& spec);

}  // namespace covercount
