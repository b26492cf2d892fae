#pragma once

#include <string>

#include "fhollow/polytope.hpp"

namespace fhollow {

/// Canonical representative of the affine unimodular class of a
/// full-dimensional lattice polytope.
///
/// canonical_vertices is d x n: the columns are the vertices in the order
/// that maximizes the vertex-facet pairing matrix, translated so the first
/// column is zero and reduced to row Hermite normal form.
struct NormalForm {
  IntMatrix canonical_vertices;
  std::string digest;  // 32 hex digits

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.canonical_vertices == b.canonical_vertices;
  }
};

/// Throws std::domain_error for non-lattice or lower-dimensional input.
NormalForm affine_normal_form(const Polytope& p);

/// False on a dimension mismatch.
bool are_equivalent(const Polytope& p, const Polytope& q);

/// FNV-1a (128 bit) of: rows and cols as little-endian u64, then the entries
/// row-major as little-endian i64. Rendered as 32 lowercase hex digits.
/// Throws std::overflow_error for entries outside the i64 range.
std::string digest(const IntMatrix& m);

/// Facet-by-vertex matrix <v, n> - Min_P(n), rows in facet order and
/// columns in vertex order.
IntMatrix pairing_matrix(const Polytope& p);

}  // namespace fhollow
