#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fhollow/hpolyhedron.hpp"
#include "fhollow/types.hpp"

namespace fhollow {

/// A rational polytope in V-representation with its facets.
///
/// Vertices are the extreme points only, sorted lexicographically. For a
/// full-dimensional polytope the irredundant facet half-spaces (sorted by
/// normal) are computed at construction. The empty polytope has dim() == -1.
class Polytope {
 public:
  /// Convex hull of a nonempty point list. Throws std::invalid_argument on
  /// empty input or mixed dimensions, std::domain_error above the ambient
  /// dimension cap.
  static Polytope convex_hull(std::span<const RatVector> points);
  static Polytope convex_hull(std::span<const IntVector> points);
  static Polytope empty(size_t ambient_dim);

  size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_) && !is_empty(); }
  bool is_lattice() const;

  const std::vector<RatVector>& vertices() const { return vertices_; }
  /// Throws std::domain_error when some vertex is not integral.
  std::vector<IntVector> lattice_vertices() const;

  /// Throws std::domain_error("facet description requires full dimension").
  const std::vector<HalfSpace>& facets() const;

  /// min <x, y> over the polytope. Throws on y = 0 or an empty polytope.
  Rational min_support(const IntVector& y) const;
  /// max - min of <x, y>.
  Rational width(const IntVector& y) const;

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;
  /// Strict interior (in the ambient space).
  bool interior_contains(const RatVector& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope() = default;

  size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVector> vertices_;
  std::vector<HalfSpace> facets_;
  // Lower-dimensional polytopes: an injective coordinate projection of the
  // affine hull together with the facets of the projected image.
  std::vector<size_t> projection_;
  std::vector<HalfSpace> projected_facets_;

  friend Polytope dilate(const Polytope&, const Rational&);
};

/// Primitive integer rays of a rational polyhedral cone.
struct LatticeCone {
  std::vector<IntVector> rays;
  friend bool operator==(const LatticeCone&, const LatticeCone&) = default;
};

/// lambda * P for lambda >= 0. Facet normals are reused and offsets scaled.
/// Throws std::invalid_argument for negative lambda.
Polytope dilate(const Polytope& p, const Rational& lambda);
Polytope translate(const Polytope& p, const RatVector& shift);
/// Image under x -> linear * x + shift.
Polytope affine_image(const Polytope& p, const IntMatrix& linear, const RatVector& shift);

/// Lattice points, sorted lexicographically. With interior_only, points on
/// the boundary (and all points of a lower-dimensional polytope) are
/// excluded.
std::vector<IntVector> lattice_points(const Polytope& p, bool interior_only = false);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// conv({1} x P, 0) for a lattice polytope P; the new coordinate comes first.
Polytope pyramid(const Polytope& p);

/// Primitive generators of cone({1} x P); the new coordinate comes first.
LatticeCone cone_over(const Polytope& p);

struct SliceResult {
  Polytope embedded;
  /// Only when requested: the slice in lattice coordinates of the
  /// hyperplane, obtained from the Hermite completion of the normal.
  std::optional<Polytope> intrinsic;
};

/// P intersected with {<x, n> = c}; n must be primitive.
SliceResult slice(const Polytope& p, const IntVector& n, const Rational& c, bool intrinsic = false);

/// Unimodular U with first row equal to the primitive vector n; the
/// remaining rows give lattice coordinates on hyperplanes <x, n> = const.
IntMatrix complete_to_basis(const IntVector& n);

}  // namespace fhollow
