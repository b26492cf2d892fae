#pragma once

#include <vector>

#include "fhollow/polytope.hpp"

namespace fhollow {

/// |kP ∩ Z^d| by enumeration. Throws std::domain_error for a non-lattice P.
Integer ehrhart_count(const Polytope& p, unsigned k);

struct HStar {
  std::vector<Integer> coefficients;  // h*_0 .. h*_deg, trailing zeros trimmed
  int degree = 0;
  int codegree = 0;
};

/// h* coefficients from L(0..d) by the binomial transform. Throws
/// std::logic_error on an invariant violation (negative coefficient,
/// h*_0 != 1, or a codegree that disagrees with the first dilate having
/// interior lattice points).
HStar hstar(const Polytope& p);

/// d! times the Euclidean volume, by a signed decomposition into simplices
/// from a fixed vertex over the facets.
Integer normalized_volume(const Polytope& p);

}  // namespace fhollow
