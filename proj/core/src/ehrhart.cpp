#include "fhollow/ehrhart.hpp"

#include <stdexcept>

#include "fhollow/linalg.hpp"

namespace fhollow {

Integer ehrhart_count(const Polytope& p, unsigned k) {
  if (!p.is_lattice()) throw std::domain_error("Ehrhart counting requires a lattice polytope");
  if (k == 0) return Integer(1);
  return Integer(lattice_points(dilate(p, Rational(k))).size());
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  Integer r(1);
  for (unsigned i = 1; i <= k; ++i) r = r * Integer(n - k + i) / Integer(i);
  return r;
}

}  // namespace

HStar hstar(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("h* requires a full-dimensional polytope");
  const unsigned d = static_cast<unsigned>(p.dim());
  std::vector<Integer> counts;
  for (unsigned i = 0; i <= d; ++i) counts.push_back(ehrhart_count(p, i));

  HStar h;
  for (unsigned j = 0; j <= d; ++j) {
    Integer s;
    for (unsigned i = 0; i <= j; ++i) {
      Integer term = binomial(d + 1, j - i) * counts[i];
      if ((j - i) % 2 == 0) {
        s += term;
      } else {
        s -= term;
      }
    }
    if (s.sign() < 0) throw std::logic_error("invariant violation: negative h* coefficient");
    h.coefficients.push_back(std::move(s));
  }
  while (h.coefficients.size() > 1 && h.coefficients.back().is_zero()) h.coefficients.pop_back();
  if (!h.coefficients.front().is_one()) throw std::logic_error("invariant violation: h*_0 != 1");
  h.degree = static_cast<int>(h.coefficients.size()) - 1;
  h.codegree = static_cast<int>(d) + 1 - h.degree;

  int first_interior = 0;
  for (unsigned k = 1; k <= d + 1; ++k) {
    if (!lattice_points(dilate(p, Rational(k)), true).empty()) {
      first_interior = static_cast<int>(k);
      break;
    }
  }
  if (first_interior != h.codegree) throw std::logic_error("invariant violation: codegree mismatch");
  return h;
}

Integer normalized_volume(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("volume requires a full-dimensional polytope");
  const size_t d = p.ambient_dim();
  if (d == 1) {
    return floor(p.vertices().back()[0] - p.vertices().front()[0]);
  }
  // Cone from the first vertex over every facet not containing it, the
  // facets measured recursively in their own lattice coordinates.
  const RatVector& apex = p.vertices().front();
  Rational total;
  for (const auto& f : p.facets()) {
    Rational height = f.slack(apex);
    if (height.is_zero()) continue;
    std::vector<RatVector> face;
    for (const auto& v : p.vertices())
      if (f.slack(v).is_zero()) face.push_back(v);
    // Lattice coordinates on the facet hyperplane.
    IntMatrix basis = complete_to_basis(f.normal);
    std::vector<RatVector> coords;
    for (const auto& v : face) {
      RatVector y = apply(basis, v);
      coords.emplace_back(y.begin() + 1, y.end());
    }
    Polytope facet = Polytope::convex_hull(coords);
    if (!facet.is_lattice()) throw std::domain_error("volume of a non-lattice facet");
    Rational base(normalized_volume(facet));
    // normalized volume of a pyramid = lattice height * normalized base volume
    total += height * base;
  }
  if (!total.is_integer()) throw std::logic_error("normalized volume is not integral");
  return total.num();
}

}  // namespace fhollow
