#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fhollow/canonical_rays.hpp"
#include "fhollow/hpolyhedron.hpp"
#include "fhollow/polytope.hpp"

namespace fhollow {

struct FineResult {
  Polytope polytope;  // empty when F(P) is empty
  CanonicalRaySet defining_rays;
};

/// F(P) as the intersection of <x, v> >= Min_P(v) + 1 over the canonical
/// rays. Throws std::domain_error for lower-dimensional input.
FineResult fine_interior(const Polytope& p);

/// The same intersection over every primitive n with |n|_inf <= bound.
/// Non-primitive vectors give weaker inequalities and are skipped.
Polytope fine_interior_bruteforce(const Polytope& p, int bound);

/// Min over F(P) of <., n> equals Min_P(n) + 1. Throws
/// std::domain_error("support undefined") when F(P) is empty.
bool is_support_vector(const Polytope& p, const IntVector& n);
bool is_support_vector(const Polytope& p, const Polytope& fine, const IntVector& n);

/// Intersection of the unshifted half-spaces of those canonical rays and
/// facet normals that are support vectors. Throws when F(P) is empty.
Polytope canonical_hull(const Polytope& p);

/// Every facet normal is a support vector. Throws when F(P) is empty.
bool is_canonically_closed(const Polytope& p);

/// The dilation polyhedron and the multipliers read off from it.
struct MultiplierProfile {
  size_t dim = 0;
  CanonicalRaySet rays;
  HPolyhedron fan_polyhedron;                     // in R x M, x0 first
  std::vector<std::pair<Rational, RatVector>> vertices;  // (x0, x)
  Rational mu;
  Rational mu_max;
  Rational mu_cc;
  std::vector<Rational> special_multipliers;  // sorted, distinct
};

/// Throws std::domain_error for lower-dimensional input and
/// std::logic_error("invariant violation: ...") if the resolved polyhedron
/// contradicts the expected structure.
MultiplierProfile multiplier_profile(const Polytope& p);

/// F(lambda P), from the half-spaces of the profile at x0 = lambda.
Polytope fine_of_dilation(const MultiplierProfile& profile, const Rational& lambda);
Polytope fine_of_dilation(const Polytope& p, const Rational& lambda);

/// Least x0 on the face of the dilation polyhedron where the form of n
/// attains 1. Throws std::domain_error("not a support vector at any
/// dilation") when there is no contact.
Rational mu_of_support_vector(const MultiplierProfile& profile, const Polytope& p, const IntVector& n);
Rational mu_of_support_vector(const Polytope& p, const IntVector& n);

bool is_F_hollow(const MultiplierProfile& profile);
bool is_F_hollow(const Polytope& p);
bool is_weakly_sporadic(const MultiplierProfile& profile);
bool is_weakly_sporadic(const Polytope& p);

/// Unique interior lattice point at lattice distance one from every facet.
bool reflexive_check(const Polytope& p);

struct GorensteinData {
  Integer index;
  IntVector center;
  friend bool operator==(const GorensteinData&, const GorensteinData&) = default;
};

/// (k, x) when the dilation polyhedron is (k, x) + cone(P) with k integral
/// and x a lattice point; cross-checked against reflexive_check(kP - x).
std::optional<GorensteinData> gorenstein_data(const MultiplierProfile& profile, const Polytope& p);
std::optional<GorensteinData> gorenstein_data(const Polytope& p);

}  // namespace fhollow
