#pragma once

// Extreme rays of pointed polyhedral cones by the double description method.
//
// This is the single exact engine behind every H<->V conversion in the
// library: facets of a convex hull are the extreme rays of the dual cone of
// the homogenized points, and vertices of an H-polyhedron are extreme rays
// of its homogenization.

#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fhollow/types.hpp"

namespace fhollow {

struct ExtremeRay {
  IntVector ray;                    // primitive
  boost::dynamic_bitset<> tight;    // constraints i with <a_i, ray> = 0
};

/// Extreme rays of {x in R^n : <a_i, x> >= 0 for all i}.
///
/// The constraints must span R^n (the cone is pointed); otherwise
/// std::domain_error is thrown. The cone {0} yields an empty list. Output is
/// sorted lexicographically by ray.
std::vector<ExtremeRay> extreme_rays(std::span<const IntVector> constraints, size_t n);

}  // namespace fhollow
