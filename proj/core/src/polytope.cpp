#include "fhollow/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "fhollow/double_description.hpp"
#include "fhollow/linalg.hpp"

namespace fhollow {

namespace {

struct HullData {
  std::vector<size_t> vertex_indices;
  std::vector<HalfSpace> facets;
};

// Hull of points spanning R^d affinely. Points must be pairwise distinct.
HullData full_hull(std::span<const RatVector> points, size_t d) {
  std::vector<IntVector> gens;
  gens.reserve(points.size());
  for (const auto& p : points) {
    RatVector h(d + 1);
    h[0] = 1;
    std::copy(p.begin(), p.end(), h.begin() + 1);
    gens.push_back(primitive_direction(h));
  }
  std::vector<ExtremeRay> dual = extreme_rays(gens, d + 1);

  HullData out;
  out.facets.reserve(dual.size());
  for (const auto& f : dual) {
    IntVector normal(f.ray.begin() + 1, f.ray.end());
    normal = primitive_vector(normal);
    // Any tight point attains the minimum.
    size_t j = f.tight.find_first();
    out.facets.push_back({normal, dot(points[j], normal)});
  }

  std::vector<IntVector> tight;
  for (size_t j = 0; j < points.size(); ++j) {
    tight.clear();
    for (const auto& f : dual)
      if (f.tight.test(j)) tight.push_back(f.ray);
    if (tight.size() >= d && rank(tight) == d) out.vertex_indices.push_back(j);
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

RatVector difference(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector direction_or_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return primitive_direction(v);
  return IntVector(v.size());
}

RatVector project(const RatVector& v, std::span<const size_t> coords) {
  RatVector r;
  for (size_t c : coords) r.push_back(v[c]);
  return r;
}

// Coordinates on which the difference vectors keep their rank.
std::vector<size_t> injective_coordinates(std::span<const IntVector> diffs, size_t d, size_t k) {
  std::vector<size_t> chosen;
  for (size_t c = 0; c < d && chosen.size() < k; ++c) {
    chosen.push_back(c);
    std::vector<IntVector> sub;
    for (const auto& v : diffs) {
      IntVector s;
      for (size_t cc : chosen) s.push_back(v[cc]);
      sub.push_back(std::move(s));
    }
    if (rank(sub) < chosen.size()) chosen.pop_back();
  }
  return chosen;
}

}  // namespace

Polytope Polytope::empty(size_t ambient_dim) {
  Polytope p;
  p.ambient_ = ambient_dim;
  p.dim_ = -1;
  return p;
}

Polytope Polytope::convex_hull(std::span<const IntVector> points) {
  std::vector<RatVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rational(p));
  return convex_hull(r);
}

Polytope Polytope::convex_hull(std::span<const RatVector> input) {
  if (input.empty()) throw std::invalid_argument("convex hull of an empty point set");
  const size_t d = input.front().size();
  if (d == 0 || d > kMaxAmbientDim) throw std::domain_error("ambient dimension outside [1, 5]");
  for (const auto& p : input)
    if (p.size() != d) throw std::invalid_argument("points of mixed dimension");

  std::vector<RatVector> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope out;
  out.ambient_ = d;

  std::vector<IntVector> diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(direction_or_zero(difference(points[i], points[0])));
  const size_t k = diffs.empty() ? 0 : rank(diffs);
  out.dim_ = static_cast<int>(k);

  if (k == 0) {
    out.vertices_.push_back(points[0]);
    return out;
  }
  if (k == d) {
    HullData h = full_hull(points, d);
    for (size_t j : h.vertex_indices) out.vertices_.push_back(points[j]);
    out.facets_ = std::move(h.facets);
    return out;
  }

  out.projection_ = injective_coordinates(diffs, d, k);
  std::vector<RatVector> projected;
  projected.reserve(points.size());
  for (const auto& p : points) projected.push_back(project(p, out.projection_));
  HullData h = full_hull(projected, k);
  for (size_t j : h.vertex_indices) out.vertices_.push_back(points[j]);
  out.projected_facets_ = std::move(h.facets);
  return out;
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    if (!is_integral(v)) return false;
  return true;
}

std::vector<IntVector> Polytope::lattice_vertices() const {
  std::vector<IntVector> r;
  r.reserve(vertices_.size());
  for (const auto& v : vertices_) r.push_back(to_integer(v));
  return r;
}

const std::vector<HalfSpace>& Polytope::facets() const {
  if (!is_full_dimensional()) throw std::domain_error("facet description requires full dimension");
  return facets_;
}

Rational Polytope::min_support(const IntVector& y) const {
  if (is_empty()) throw std::domain_error("support of the empty polytope");
  if (content(y).is_zero()) throw std::invalid_argument("support function of the zero vector");
  Rational best = dot(vertices_[0], y);
  for (size_t i = 1; i < vertices_.size(); ++i) {
    Rational v = dot(vertices_[i], y);
    if (v < best) best = std::move(v);
  }
  return best;
}

Rational Polytope::width(const IntVector& y) const {
  IntVector neg(y.size());
  for (size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
  return -min_support(neg) - min_support(y);
}

bool Polytope::contains(const RatVector& x) const {
  if (is_empty() || x.size() != ambient_) return false;
  if (is_full_dimensional()) {
    for (const auto& f : facets_)
      if (!f.contains(x)) return false;
    return true;
  }
  if (dim_ == 0) return x == vertices_[0];
  std::vector<IntVector> diffs;
  for (size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(direction_or_zero(difference(vertices_[i], vertices_[0])));
  diffs.push_back(direction_or_zero(difference(x, vertices_[0])));
  if (rank(diffs) != static_cast<size_t>(dim_)) return false;
  RatVector px = project(x, projection_);
  for (const auto& f : projected_facets_)
    if (!f.contains(px)) return false;
  return true;
}

bool Polytope::contains(const IntVector& x) const { return contains(to_rational(x)); }

bool Polytope::interior_contains(const RatVector& x) const {
  if (!is_full_dimensional()) return false;
  for (const auto& f : facets_)
    if (f.slack(x).sign() <= 0) return false;
  return true;
}

Polytope dilate(const Polytope& p, const Rational& lambda) {
  if (lambda.sign() < 0) throw std::invalid_argument("negative dilation factor");
  if (p.is_empty()) return p;
  if (lambda.is_zero()) {
    std::vector<RatVector> origin{RatVector(p.ambient_dim())};
    return Polytope::convex_hull(origin);
  }
  Polytope out = p;
  for (auto& v : out.vertices_)
    for (auto& x : v) x *= lambda;
  for (auto& f : out.facets_) f.offset *= lambda;
  for (auto& f : out.projected_facets_) f.offset *= lambda;
  return out;
}

Polytope translate(const Polytope& p, const RatVector& shift) {
  if (p.is_empty()) return p;
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) {
    RatVector w = v;
    for (size_t i = 0; i < w.size(); ++i) w[i] += shift.at(i);
    pts.push_back(std::move(w));
  }
  return Polytope::convex_hull(pts);
}

Polytope affine_image(const Polytope& p, const IntMatrix& linear, const RatVector& shift) {
  if (p.is_empty()) return Polytope::empty(linear.rows());
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) {
    RatVector w = apply(linear, v);
    for (size_t i = 0; i < w.size(); ++i) w[i] += shift.at(i);
    pts.push_back(std::move(w));
  }
  return Polytope::convex_hull(pts);
}

namespace {

void enumerate_box(const Polytope& p, bool interior_only, std::vector<IntVector>& out) {
  const size_t d = p.ambient_dim();
  IntVector lo(d), hi(d);
  for (size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return;
  }

  if (!p.is_full_dimensional()) {
    if (interior_only) return;
    IntVector x = lo;
    while (true) {
      if (p.contains(x)) out.push_back(x);
      size_t i = d;
      while (i > 0) {
        --i;
        if (x[i] < hi[i]) {
          x[i] += 1;
          break;
        }
        x[i] = lo[i];
        if (i == 0) return;
      }
    }
  }

  // Full-dimensional: iterate over the leading coordinates and solve the
  // facet inequalities for the exact range of the last coordinate.
  const auto& facets = p.facets();
  const size_t last = d - 1;
  IntVector x = lo;
  while (true) {
    Rational lower = Rational(lo[last]), upper = Rational(hi[last]);
    bool feasible = true;
    for (const auto& f : facets) {
      Rational partial;
      for (size_t i = 0; i < last; ++i)
        if (!f.normal[i].is_zero()) partial += Rational(f.normal[i] * x[i]);
      Rational rest = f.offset - partial;  // need normal[last] * x_last >= rest
      const Integer& c = f.normal[last];
      if (c.is_zero()) {
        int s = (partial - f.offset).sign();
        if (s < 0 || (interior_only && s == 0)) {
          feasible = false;
          break;
        }
        continue;
      }
      Rational bound = rest / Rational(c);
      if (c.sign() > 0) {
        Rational b = interior_only ? Rational(floor(bound) + Integer(1)) : Rational(ceil(bound));
        if (b > lower) lower = b;
      } else {
        Rational b = interior_only ? Rational(ceil(bound) - Integer(1)) : Rational(floor(bound));
        if (b < upper) upper = b;
      }
    }
    if (feasible) {
      for (Integer t = lower.num(); t <= upper.num(); t += Integer(1)) {
        x[last] = t;
        out.push_back(x);
      }
    }
    if (last == 0) return;
    size_t i = last;
    while (true) {
      --i;
      if (x[i] < hi[i]) {
        x[i] += 1;
        break;
      }
      x[i] = lo[i];
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<IntVector> lattice_points(const Polytope& p, bool interior_only) {
  std::vector<IntVector> out;
  if (p.is_empty()) return out;
  enumerate_box(p, interior_only, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("Minkowski sum dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<RatVector> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVector s = a;
      for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
      pts.push_back(std::move(s));
    }
  return Polytope::convex_hull(pts);
}

Polytope pyramid(const Polytope& p) {
  if (p.is_empty() || !p.is_lattice()) throw std::domain_error("pyramid requires a lattice polytope");
  std::vector<RatVector> pts;
  pts.emplace_back(p.ambient_dim() + 1);
  for (const auto& v : p.vertices()) {
    RatVector w(p.ambient_dim() + 1);
    w[0] = 1;
    std::copy(v.begin(), v.end(), w.begin() + 1);
    pts.push_back(std::move(w));
  }
  return Polytope::convex_hull(pts);
}

LatticeCone cone_over(const Polytope& p) {
  LatticeCone c;
  for (const auto& v : p.vertices()) {
    RatVector w(p.ambient_dim() + 1);
    w[0] = 1;
    std::copy(v.begin(), v.end(), w.begin() + 1);
    c.rays.push_back(primitive_direction(w));
  }
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

IntMatrix complete_to_basis(const IntVector& n) {
  const size_t d = n.size();
  if (!content(n).is_one()) throw std::invalid_argument("basis completion requires a primitive vector");
  IntMatrix col(d, 1);
  for (size_t i = 0; i < d; ++i) col(i, 0) = n[i];
  // U * n^T = e_1, so n is the first row of (U^{-1})^T.
  HermiteForm hf = hermite_normal_form(col);
  return unimodular_inverse(hf.u).transposed();
}

SliceResult slice(const Polytope& p, const IntVector& n, const Rational& c, bool intrinsic) {
  const size_t d = p.ambient_dim();
  if (n.size() != d) throw std::invalid_argument("slice normal dimension mismatch");
  if (!content(n).is_one()) throw std::invalid_argument("slice normal must be primitive");

  std::vector<RatVector> pts;
  std::vector<Rational> vals;
  for (const auto& v : p.vertices()) vals.push_back(dot(v, n) - c);
  const auto& vs = p.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vals[i].is_zero()) pts.push_back(vs[i]);
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (vals[i].sign() * vals[j].sign() >= 0) continue;
      // point on segment [v_i, v_j] where the value vanishes
      Rational t = vals[i] / (vals[i] - vals[j]);
      RatVector x(d);
      for (size_t k = 0; k < d; ++k) x[k] = vs[i][k] + t * (vs[j][k] - vs[i][k]);
      pts.push_back(std::move(x));
    }
  }

  SliceResult out{pts.empty() ? Polytope::empty(d) : Polytope::convex_hull(pts), std::nullopt};
  if (intrinsic) {
    if (d < 2) throw std::domain_error("intrinsic slice coordinates need dimension >= 2");
    if (out.embedded.is_empty()) {
      out.intrinsic = Polytope::empty(d - 1);
    } else {
      IntMatrix basis = complete_to_basis(n);
      std::vector<RatVector> coords;
      for (const auto& v : out.embedded.vertices()) {
        RatVector y = apply(basis, v);
        coords.emplace_back(y.begin() + 1, y.end());
      }
      out.intrinsic = Polytope::convex_hull(coords);
    }
  }
  return out;
}

}  // namespace fhollow
