#include "fhollow/canonical_rays.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fhollow/double_description.hpp"
#include "fhollow/linalg.hpp"

namespace fhollow {

namespace {

bool in_simplicial_cone(const RatMatrix& inverse, const IntVector& x) {
  RatVector lambda(inverse.rows());
  for (size_t i = 0; i < inverse.rows(); ++i) {
    Rational s;
    for (size_t j = 0; j < inverse.cols(); ++j)
      if (!x[j].is_zero()) s += inverse(i, j) * Rational(x[j]);
    if (s.sign() < 0) return false;
  }
  return true;
}

RatMatrix rational_inverse(const IntMatrix& m) {
  const size_t n = m.rows();
  RatMatrix inv(n, n);
  RatMatrix a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
  for (size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    auto col = solve_square(a, e);
    if (!col) throw std::invalid_argument("triangulate first");
    for (size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

}  // namespace

std::vector<IntVector> hilbert_basis_simplicial(const std::vector<IntVector>& rays) {
  if (rays.empty()) throw std::invalid_argument("triangulate first");
  const size_t d = rays.front().size();
  for (const auto& r : rays)
    if (r.size() != d) throw std::invalid_argument("ray dimension mismatch");
  if (rays.size() != d || rank(rays) != d) throw std::invalid_argument("triangulate first");

  // Columns of r are the rays.
  IntMatrix r(d, d);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < d; ++i) r(i, j) = rays[j][i];
  RatMatrix inv = rational_inverse(r);

  // Coset representatives of Z^d modulo the ray lattice come from the
  // diagonal of the Hermite form of the rays (as rows).
  IntMatrix rows = IntMatrix::from_rows<IntVector>(rays, d);
  HermiteForm hf = hermite_normal_form(rows);
  std::vector<IntVector> candidates(rays.begin(), rays.end());
  IntVector x(d);
  while (true) {
    bool nonzero = false;
    for (const auto& v : x)
      if (!v.is_zero()) nonzero = true;
    if (nonzero) {
      // Reduce into the half-open parallelepiped.
      RatVector lambda(d);
      for (size_t i = 0; i < d; ++i) {
        Rational s;
        for (size_t j = 0; j < d; ++j) s += inv(i, j) * Rational(x[j]);
        lambda[i] = s - Rational(floor(s));
      }
      IntVector pt(d);
      bool zero = true;
      for (size_t i = 0; i < d; ++i) {
        Rational s;
        for (size_t j = 0; j < d; ++j) s += lambda[j] * Rational(r(i, j));
        pt[i] = s.num();
        if (!s.is_integer()) throw std::logic_error("parallelepiped point not integral");
        if (!pt[i].is_zero()) zero = false;
      }
      if (!zero) candidates.push_back(std::move(pt));
    }
    size_t i = d;
    bool finished = true;
    while (i > 0) {
      --i;
      if (x[i] + Integer(1) < hf.h(i, i)) {
        x[i] += 1;
        finished = false;
        break;
      }
      x[i] = 0;
    }
    if (finished) break;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<IntVector> basis;
  IntVector diff(d);
  for (const auto& h : candidates) {
    bool reducible = false;
    for (const auto& g : candidates) {
      if (&g == &h) continue;
      for (size_t i = 0; i < d; ++i) diff[i] = h[i] - g[i];
      if (in_simplicial_cone(inv, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(h);
  }
  return basis;
}

std::vector<std::vector<size_t>> placing_triangulation(const std::vector<IntVector>& rays) {
  if (rays.empty()) return {};
  const size_t d = rays.front().size();

  // Initial simplex: the first d rays in order that are independent.
  std::vector<size_t> first;
  std::vector<IntVector> chosen;
  std::vector<bool> used(rays.size(), false);
  for (size_t i = 0; i < rays.size() && first.size() < d; ++i) {
    chosen.push_back(rays[i]);
    if (rank(chosen) == chosen.size()) {
      first.push_back(i);
      used[i] = true;
    } else {
      chosen.pop_back();
    }
  }
  if (first.size() < d) throw std::domain_error("cone is not full-dimensional");

  std::vector<std::vector<size_t>> cones{first};
  std::vector<IntVector> facet_rays;
  for (size_t k = 0; k < rays.size(); ++k) {
    if (used[k]) continue;
    // Boundary facets are the (d-1)-subsets of cones that occur once.
    std::map<std::vector<size_t>, std::pair<size_t, size_t>> facets;  // -> (count, apex)
    for (const auto& c : cones) {
      for (size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<size_t> f;
        for (size_t j = 0; j < c.size(); ++j)
          if (j != drop) f.push_back(c[j]);
        std::sort(f.begin(), f.end());
        auto [it, inserted] = facets.try_emplace(f, 0, c[drop]);
        it->second.first++;
      }
    }
    std::vector<std::vector<size_t>> added;
    for (const auto& [f, info] : facets) {
      if (info.first != 1) continue;
      facet_rays.clear();
      for (size_t j : f) facet_rays.push_back(rays[j]);
      IntVector normal = kernel_vector(facet_rays, d);
      Integer apex_side = dot(normal, rays[info.second]);
      Integer new_side = dot(normal, rays[k]);
      if (apex_side.sign() * new_side.sign() < 0) {
        std::vector<size_t> c = f;
        c.push_back(k);
        std::sort(c.begin(), c.end());
        added.push_back(std::move(c));
      }
    }
    if (added.empty()) throw std::domain_error("generator is not extreme");
    for (auto& c : added) cones.push_back(std::move(c));
    used[k] = true;
  }
  std::sort(cones.begin(), cones.end());
  return cones;
}

std::vector<IntVector> vertices_of_conv_plus_cone(const std::vector<IntVector>& points,
                                                  const std::vector<IntVector>& rays) {
  if (points.empty()) return {};
  const size_t d = points.front().size();
  std::vector<IntVector> gens;
  gens.reserve(points.size() + rays.size());
  for (const auto& p : points) {
    IntVector g(d + 1);
    g[0] = 1;
    std::copy(p.begin(), p.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : rays) {
    IntVector g(d + 1);
    std::copy(r.begin(), r.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  std::vector<ExtremeRay> facets = extreme_rays(gens, d + 1);
  std::vector<IntVector> out;
  std::vector<IntVector> tight;
  for (size_t j = 0; j < points.size(); ++j) {
    tight.clear();
    for (const auto& f : facets)
      if (f.tight.test(j)) tight.push_back(f.ray);
    if (tight.size() >= d && rank(tight) == d) out.push_back(points[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> canonical_ray_directions(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("canonical rays require full dimension");
  const auto& facets = p.facets();
  std::vector<IntVector> all;
  for (const auto& v : p.vertices()) {
    std::vector<IntVector> cone;
    for (const auto& f : facets)
      if (f.slack(v).is_zero()) cone.push_back(f.normal);
    std::sort(cone.begin(), cone.end());
    if (cone.size() == p.ambient_dim()) {
      IntMatrix m = IntMatrix::from_rows<IntVector>(cone, cone.size());
      Integer det = determinant(m);
      if (abs(det).is_one()) {
        all.insert(all.end(), cone.begin(), cone.end());
        continue;
      }
    }
    std::vector<IntVector> hb;
    for (const auto& simplex : placing_triangulation(cone)) {
      std::vector<IntVector> rays;
      for (size_t i : simplex) rays.push_back(cone[i]);
      auto piece = hilbert_basis_simplicial(rays);
      hb.insert(hb.end(), piece.begin(), piece.end());
    }
    std::sort(hb.begin(), hb.end());
    hb.erase(std::unique(hb.begin(), hb.end()), hb.end());
    auto verts = vertices_of_conv_plus_cone(hb, cone);
    all.insert(all.end(), verts.begin(), verts.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

CanonicalRaySet canonical_rays(const Polytope& p) {
  CanonicalRaySet s;
  s.rays = canonical_ray_directions(p);
  s.offsets.reserve(s.rays.size());
  for (const auto& r : s.rays) s.offsets.push_back(p.min_support(r));
  return s;
}

}  // namespace fhollow
