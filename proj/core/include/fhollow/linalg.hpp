#pragma once

// Exact integer and rational linear algebra on small dense systems.

#include <optional>
#include <span>

#include "fhollow/types.hpp"

namespace fhollow {

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(const IntVector& v);

/// v divided by its content. Throws std::invalid_argument on the zero vector.
IntVector primitive_vector(const IntVector& v);

/// Smallest positive integer multiple of v that is integral, then made
/// primitive. Direction is preserved. Throws on the zero vector.
IntVector primitive_direction(const RatVector& v);

Integer determinant(IntMatrix m);
Rational determinant(RatMatrix m);

size_t rank(IntMatrix m);
size_t rank(std::span<const IntVector> vectors);

/// Row Hermite normal form: U unimodular with U*A = H, H in reduced row
/// echelon form with positive pivots, entries above each pivot in
/// [0, pivot), and zero rows last.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Exact solution of A*x = b, or nullopt when A is singular. Throws
/// std::invalid_argument on a dimension mismatch or non-square A.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

/// Primitive generator of the one-dimensional kernel of an (n-1) x n integer
/// matrix of full row rank, built from signed maximal minors. Returns the
/// zero vector when the rank is deficient.
IntVector kernel_vector(std::span<const IntVector> rows, size_t n);

/// Inverse of a unimodular matrix. Throws std::domain_error if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

IntVector apply(const IntMatrix& m, const IntVector& v);
RatVector apply(const IntMatrix& m, const RatVector& v);

}  // namespace fhollow
