#pragma once

#include <vector>

#include "fhollow/polytope.hpp"

namespace fhollow {

struct InscribedBox {
  RatVector center;
  Rational radius;  // the cube center + [-radius, radius]^d lies in P
};

/// Largest axis-parallel cube inside a full-dimensional polytope, found as
/// the best vertex of the lifted system <c, v> - t * |v|_1 >= b over the
/// facets (v, b). Ties go to the lexicographically least center.
/// Throws std::domain_error for lower-dimensional input.
InscribedBox inscribed_box_radius(const Polytope& p);

struct WidthCertificate {
  Rational width;
  /// Every primitive direction attaining the width, both signs, sorted.
  std::vector<IntVector> directions;
};

/// Exact lattice width with the complete set of width directions.
/// Throws std::domain_error for lower-dimensional input.
WidthCertificate lattice_width(const Polytope& p);

}  // namespace fhollow
