#pragma once

#include <vector>

#include "fhollow/polytope.hpp"

namespace fhollow {

/// Minimal generating set of the lattice points of the simplicial cone
/// spanned by the given rays, sorted. The rays must be linearly independent
/// and span the ambient space; dependent rays raise
/// std::invalid_argument("triangulate first").
std::vector<IntVector> hilbert_basis_simplicial(const std::vector<IntVector>& rays);

/// Placing triangulation of a pointed full-dimensional cone whose generators
/// are all extreme. Generators are inserted in lexicographic order; each
/// returned cone lists indices into the sorted generator list.
std::vector<std::vector<size_t>> placing_triangulation(const std::vector<IntVector>& sorted_rays);

/// Vertices of conv(points) + cone(rays) for a pointed full-dimensional
/// cone, sorted.
std::vector<IntVector> vertices_of_conv_plus_cone(const std::vector<IntVector>& points,
                                                  const std::vector<IntVector>& rays);

struct CanonicalRaySet {
  std::vector<IntVector> rays;  // sorted, primitive
  std::vector<Rational> offsets;  // Min_P(ray), aligned with rays
};

/// Union over the vertices v of P of the vertices of conv(sigma_v ∩ N \ 0),
/// where sigma_v is the normal cone at v. Throws std::domain_error for
/// lower-dimensional input.
CanonicalRaySet canonical_rays(const Polytope& p);

/// Just the ray part, which depends only on the normal fan.
std::vector<IntVector> canonical_ray_directions(const Polytope& p);

}  // namespace fhollow
