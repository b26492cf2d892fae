#include "fhollow/lattice_width.hpp"

#include <algorithm>
#include <stdexcept>

#include "fhollow/hpolyhedron.hpp"
#include "fhollow/linalg.hpp"

namespace fhollow {

InscribedBox inscribed_box_radius(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("inscribed box requires full dimension");
  const size_t d = p.ambient_dim();
  std::vector<HalfSpace> lifted;
  for (const auto& f : p.facets()) {
    IntVector n(f.normal.begin(), f.normal.end());
    Integer l1;
    for (const auto& x : f.normal) l1 += abs(x);
    n.push_back(-l1);
    lifted.push_back(HalfSpace::make(n, f.offset));
  }
  IntVector t(d + 1);
  t[d] = 1;
  lifted.push_back({t, Rational(0)});

  auto res = resolve_hpolyhedron(lifted, d + 1);
  if (!res) throw std::logic_error("inscribed box system infeasible");
  const RatVector* best = nullptr;
  for (const auto& v : res->vertices) {
    // vertices are sorted, so the first maximizer has the least center
    if (!best || v[d] > (*best)[d]) best = &v;
  }
  InscribedBox box;
  box.center.assign(best->begin(), best->begin() + d);
  box.radius = (*best)[d];
  if (box.radius.sign() <= 0) throw std::logic_error("inscribed box has no interior");
  return box;
}

namespace {

// Width of a point set in direction n, vertices given in integer form when
// the polytope is a lattice polytope.
template <class Vec>
auto width_of(const std::vector<Vec>& verts, const IntVector& n) {
  auto lo = dot(verts[0], n), hi = lo;
  for (size_t i = 1; i < verts.size(); ++i) {
    auto v = dot(verts[i], n);
    if (v < lo) lo = v;
    if (v > hi) hi = std::move(v);
  }
  return hi - lo;
}

template <class Vec, class Scalar>
WidthCertificate scan(const Polytope& p, const std::vector<Vec>& verts) {
  const size_t d = p.ambient_dim();
  Scalar w0;
  bool have = false;
  auto consider = [&](const IntVector& n) {
    Scalar w = width_of(verts, n);
    if (!have || w < w0) {
      w0 = w;
      have = true;
    }
  };
  for (size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = 1;
    consider(e);
  }
  for (const auto& f : p.facets()) consider(f.normal);

  InscribedBox box = inscribed_box_radius(p);
  // width(P, n) >= 2 t |n|_1 >= 2 t |n|_inf
  Integer bound = floor(Rational(w0) / (Rational(2) * box.radius));

  WidthCertificate cert;
  cert.width = Rational(w0);
  if (bound.is_zero()) throw std::logic_error("width search bound is zero");
  const int64_t b = bound.to_int64();
  IntVector n(d);
  for (size_t i = 0; i < d; ++i) n[i] = -b;
  while (true) {
    // Only directions whose first nonzero entry is positive; the negatives
    // are added afterwards.
    size_t lead = 0;
    while (lead < d && n[lead].is_zero()) ++lead;
    if (lead < d && n[lead].sign() > 0 && content(n).is_one()) {
      Scalar w = width_of(verts, n);
      if (Rational(w) < cert.width) {
        cert.width = Rational(w);
        cert.directions.clear();
      }
      if (Rational(w) == cert.width) cert.directions.push_back(n);
    }
    size_t i = d;
    while (i > 0) {
      --i;
      if (n[i] < Integer(b)) {
        n[i] += 1;
        break;
      }
      n[i] = -b;
      if (i == 0) goto done;
    }
  }
done:
  {
    const size_t half = cert.directions.size();
    for (size_t k = 0; k < half; ++k) {
      IntVector m = cert.directions[k];
      for (auto& x : m) x = -x;
      cert.directions.push_back(std::move(m));
    }
  }
  std::sort(cert.directions.begin(), cert.directions.end());
  return cert;
}

}  // namespace

WidthCertificate lattice_width(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("lattice width requires full dimension");
  if (p.is_lattice()) return scan<IntVector, Integer>(p, p.lattice_vertices());
  return scan<RatVector, Rational>(p, p.vertices());
}

}  // namespace fhollow
