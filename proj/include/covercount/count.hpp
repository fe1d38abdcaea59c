#pragma once

#include "covercount/numeric.hpp"
#include "covercount/problem.hpp"

namespace covercount {

/// Exact factorization of the closed-form count into its two projective
/// degrees. All values are arbitrary-precision integers.
struct CountBreakdown {
  BigInt segre;
  BigInt rho;
  BigInt total;
};

/// C(t/r, t0/r). Throws InvalidSpec when the spec fails validation.
BigInt segre_degree(const ProblemSpec& spec);

/// prod_j (b_j - 1) * k! / prod_l c_l!  =  prod_l l^{c_l} * (sum c_l)! / prod_l c_l!.
BigInt rho_degree(const ProblemSpec& spec);

/// Both factors and their product.
CountBreakdown cover_count(const ProblemSpec& spec);

}  // namespace covercount
