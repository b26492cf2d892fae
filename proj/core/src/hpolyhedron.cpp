#include "fhollow/hpolyhedron.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fhollow/double_description.hpp"
#include "fhollow/linalg.hpp"

namespace fhollow {

HalfSpace HalfSpace::make(const RatVector& normal, const Rational& offset) {
  Integer l(1);
  for (const auto& x : normal) l = lcm(l, x.den());
  IntVector n;
  n.reserve(normal.size());
  for (const auto& x : normal) n.push_back(x.num() * (l / x.den()));
  Integer g = content(n);
  if (g.is_zero()) throw std::invalid_argument("half-space with zero normal");
  for (auto& x : n) x = x / g;
  return {std::move(n), offset * Rational(l, g)};
}

HalfSpace HalfSpace::make(const IntVector& normal, const Rational& offset) {
  Integer g = content(normal);
  if (g.is_zero()) throw std::invalid_argument("half-space with zero normal");
  if (g.is_one()) return {normal, offset};
  IntVector n;
  for (const auto& x : normal) n.push_back(x / g);
  return {std::move(n), offset / Rational(g)};
}

Rational HalfSpace::slack(const RatVector& x) const { return dot(x, normal) - offset; }

std::optional<PolyhedronResolution> resolve_hpolyhedron(std::span<const HalfSpace> halfspaces,
                                                        size_t dim) {
  std::vector<IntVector> rows;
  rows.reserve(halfspaces.size() + 1);
  {
    IntVector t(dim + 1);
    t[0] = 1;
    rows.push_back(std::move(t));
  }
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw std::invalid_argument("half-space dimension mismatch");
    IntVector r(dim + 1);
    r[0] = -h.offset.num();
    for (size_t i = 0; i < dim; ++i) r[i + 1] = h.normal[i] * h.offset.den();
    rows.push_back(std::move(r));
  }
  std::vector<ExtremeRay> extreme = extreme_rays(rows, dim + 1);

  PolyhedronResolution res;
  for (const auto& e : extreme) {
    if (e.ray[0].is_zero()) {
      IntVector r(e.ray.begin() + 1, e.ray.end());
      res.rays.push_back(primitive_vector(r));
    } else {
      RatVector v(dim);
      for (size_t i = 0; i < dim; ++i) v[i] = Rational(e.ray[i + 1], e.ray[0]);
      res.vertices.push_back(std::move(v));
    }
  }
  if (res.vertices.empty()) return std::nullopt;
  std::sort(res.vertices.begin(), res.vertices.end());
  std::sort(res.rays.begin(), res.rays.end());
  return res;
}

HPolyhedron::HPolyhedron(std::vector<HalfSpace> halfspaces, size_t dim)
    : dim_(dim), halfspaces_(std::move(halfspaces)), resolution_(resolve_hpolyhedron(halfspaces_, dim)) {}

const std::vector<RatVector>& HPolyhedron::vertices() const {
  if (!resolution_) throw std::logic_error("empty polyhedron has no vertices");
  return resolution_->vertices;
}

const std::vector<IntVector>& HPolyhedron::rays() const {
  if (!resolution_) throw std::logic_error("empty polyhedron has no rays");
  return resolution_->rays;
}

int HPolyhedron::face_dim(size_t i) const {
  if (!resolution_) return -1;
  const HalfSpace& h = halfspaces_.at(i);
  std::vector<IntVector> gens;
  for (const auto& v : resolution_->vertices) {
    if (!h.slack(v).is_zero()) continue;
    RatVector hv(dim_ + 1);
    hv[0] = 1;
    std::copy(v.begin(), v.end(), hv.begin() + 1);
    gens.push_back(primitive_direction(hv));
  }
  if (gens.empty()) return -1;
  for (const auto& r : resolution_->rays) {
    if (!dot(r, h.normal).is_zero()) continue;
    IntVector hr(dim_ + 1);
    std::copy(r.begin(), r.end(), hr.begin() + 1);
    gens.push_back(hr);
  }
  return static_cast<int>(rank(gens)) - 1;
}

size_t HPolyhedron::facet_count() const {
  if (!resolution_) return 0;
  std::set<std::pair<std::vector<size_t>, std::vector<size_t>>> faces;
  for (size_t i = 0; i < halfspaces_.size(); ++i) {
    if (!is_facet(i)) continue;
    std::vector<size_t> vs, rs;
    for (size_t v = 0; v < resolution_->vertices.size(); ++v)
      if (halfspaces_[i].slack(resolution_->vertices[v]).is_zero()) vs.push_back(v);
    for (size_t r = 0; r < resolution_->rays.size(); ++r)
      if (dot(resolution_->rays[r], halfspaces_[i].normal).is_zero()) rs.push_back(r);
    faces.emplace(std::move(vs), std::move(rs));
  }
  return faces.size();
}

}  // namespace fhollow
