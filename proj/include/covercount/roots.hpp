#pragma once

#include <vector>

#include "covercount/poly.hpp"

namespace covercount {

enum class Precision { kDouble, kExtended };

struct RootCluster {
  Complex center;        // mean of the clustered approximations
  int multiplicity = 0;  // cluster size
  double residual = 0;   // |p(center)|
};

/// All complex roots of a nonzero polynomial, grouped into clusters of the
/// given radius; multiplicities sum to the degree. Roots come from the
/// eigenvalues of the companion matrix, polished by a few Newton steps.
/// Clusters are returned sorted by (real, imaginary) part of the center.
///
/// Throws ZeroInput on the zero polynomial and PrecisionExhausted when the
/// clustering is ambiguous at the working precision: per-root error bounds
/// overlap an inter-cluster gap, so merging or splitting cannot be decided.
std::vector<RootCluster> roots_clustered(const ComplexPoly& p, double cluster_radius,
                                         Precision prec = Precision::kDouble);

/// Convenience overload: evaluate a rational polynomial in the complex domain
/// and cluster its roots.
std::vector<RootCluster> roots_clustered(const RationalPoly& p, double cluster_radius,
                                         Precision prec = Precision::kDouble);

}  // namespace covercount
