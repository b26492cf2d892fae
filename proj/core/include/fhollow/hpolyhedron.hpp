#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "fhollow/types.hpp"

namespace fhollow {

/// The closed half-space {x : <x, normal> >= offset}, normal primitive.
struct HalfSpace {
  IntVector normal;
  Rational offset;

  /// Rescales an arbitrary rational normal to a primitive integer one and
  /// adjusts the offset accordingly. Throws on a zero normal.
  static HalfSpace make(const RatVector& normal, const Rational& offset);
  static HalfSpace make(const IntVector& normal, const Rational& offset);

  Rational slack(const RatVector& x) const;  // <x, normal> - offset
  bool contains(const RatVector& x) const { return slack(x).sign() >= 0; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace& a, const HalfSpace& b) {
    if (auto c = std::lexicographical_compare_three_way(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                                        b.normal.end());
        c != 0)
      return c;
    return a.offset <=> b.offset;
  }
};

/// Vertices and primitive recession rays of a pointed polyhedron, both
/// sorted lexicographically.
struct PolyhedronResolution {
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;
};

/// Resolves the intersection of the half-spaces in R^dim into vertices and
/// recession rays; nullopt when the intersection is empty. The normals must
/// span R^dim (pointed polyhedron), otherwise std::domain_error.
std::optional<PolyhedronResolution> resolve_hpolyhedron(std::span<const HalfSpace> halfspaces,
                                                        size_t dim);

/// A possibly unbounded intersection of finitely many half-spaces, resolved
/// at construction.
class HPolyhedron {
 public:
  HPolyhedron(std::vector<HalfSpace> halfspaces, size_t dim);

  size_t dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  bool is_empty() const { return !resolution_; }
  bool is_bounded() const { return resolution_ && resolution_->rays.empty(); }
  /// Throws std::logic_error when empty.
  const std::vector<RatVector>& vertices() const;
  const std::vector<IntVector>& rays() const;

  /// Dimension of the face cut out by half-space i (-1 if it misses).
  int face_dim(size_t i) const;
  bool is_facet(size_t i) const { return face_dim(i) == static_cast<int>(dim_) - 1; }
  /// Number of distinct facets (half-spaces defining the same facet count once).
  size_t facet_count() const;

 private:
  size_t dim_;
  std::vector<HalfSpace> halfspaces_;
  std::optional<PolyhedronResolution> resolution_;
};

}  // namespace fhollow
