#include "fhollow/fine_interior.hpp"

#include <algorithm>
#include <stdexcept>

#include "fhollow/linalg.hpp"

namespace fhollow {

namespace {

Polytope bounded_intersection(const std::vector<HalfSpace>& hs, size_t d) {
  auto res = resolve_hpolyhedron(hs, d);
  if (!res) return Polytope::empty(d);
  if (!res->rays.empty()) throw std::logic_error("expected a bounded intersection");
  return Polytope::convex_hull(res->vertices);
}

Rational min_over(const Polytope& q, const IntVector& n) { return q.min_support(n); }

}  // namespace

FineResult fine_interior(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("Fine interior requires full dimension");
  CanonicalRaySet rays = canonical_rays(p);
  std::vector<HalfSpace> hs;
  hs.reserve(rays.rays.size());
  for (size_t i = 0; i < rays.rays.size(); ++i) hs.push_back({rays.rays[i], rays.offsets[i] + Rational(1)});
  Polytope f = bounded_intersection(hs, p.ambient_dim());
  return {std::move(f), std::move(rays)};
}

Polytope fine_interior_bruteforce(const Polytope& p, int bound) {
  if (bound < 1) throw std::invalid_argument("brute-force bound must be positive");
  const size_t d = p.ambient_dim();
  if (!p.is_full_dimensional()) return Polytope::empty(d);
  // The region is cut by growing boxes so that short normals come first.
  // Cuts are batched; after each resolve, constraints slack on the whole
  // region are dropped since they are redundant. A box pass that cuts
  // Every constraint either cuts and is added, or is already implied by a
  // superset of the final region, so one pass per box is exact.
  std::vector<HalfSpace> hs;
  for (size_t i = 0; i < d; ++i)
    for (int sign : {1, -1}) {
      IntVector e(d);
      e[i] = sign;
      hs.push_back({e, p.min_support(e) + Rational(1)});
    }
  Polytope current = bounded_intersection(hs, d);
  auto resolve = [&] {
    current = bounded_intersection(hs, d);
    if (current.is_empty()) return;
    std::erase_if(hs, [&](const HalfSpace& h) { return current.min_support(h.normal) != h.offset; });
  };
  std::vector<int> radii;
  for (int r = 1; r < bound; r *= 2) radii.push_back(r);
  radii.push_back(bound);
  for (size_t ri = 0; ri < radii.size() && !current.is_empty();) {
    const int r = radii[ri];
    size_t pending = 0;
    IntVector n(d);
    for (auto& x : n) x = -r;
    for (;;) {
      if (content(n).is_one()) {
        Rational off = p.min_support(n) + Rational(1);
        if (current.min_support(n) < off) {
          hs.push_back({n, off});
          if (++pending == 32) {
            resolve();
            pending = 0;
            if (current.is_empty()) return current;
          }
        }
      }
      size_t i = d;
      bool finished = true;
      while (i > 0) {
        --i;
        if (n[i] < Integer(r)) {
          n[i] += 1;
          finished = false;
          break;
        }
        n[i] = -r;
      }
      if (finished) break;
    }
    if (pending > 0) resolve();
    ++ri;
  }
  return current;
}

bool is_support_vector(const Polytope& p, const Polytope& fine, const IntVector& n) {
  if (fine.is_empty()) throw std::domain_error("support undefined");
  return min_over(fine, n) == p.min_support(n) + Rational(1);
}

bool is_support_vector(const Polytope& p, const IntVector& n) {
  return is_support_vector(p, fine_interior(p).polytope, n);
}

Polytope canonical_hull(const Polytope& p) {
  FineResult fr = fine_interior(p);
  if (fr.polytope.is_empty()) throw std::domain_error("support undefined");
  // The canonical rays contain every facet normal.
  std::vector<HalfSpace> hs;
  for (size_t i = 0; i < fr.defining_rays.rays.size(); ++i) {
    const IntVector& v = fr.defining_rays.rays[i];
    if (is_support_vector(p, fr.polytope, v)) hs.push_back({v, fr.defining_rays.offsets[i]});
  }
  return bounded_intersection(hs, p.ambient_dim());
}

bool is_canonically_closed(const Polytope& p) {
  FineResult fr = fine_interior(p);
  if (fr.polytope.is_empty()) throw std::domain_error("support undefined");
  for (const auto& f : p.facets())
    if (!is_support_vector(p, fr.polytope, f.normal)) return false;
  return true;
}

namespace {

std::vector<HalfSpace> fan_halfspaces(const CanonicalRaySet& rays) {
  std::vector<HalfSpace> hs;
  hs.reserve(rays.rays.size());
  for (size_t i = 0; i < rays.rays.size(); ++i) {
    RatVector normal;
    normal.push_back(-rays.offsets[i]);
    for (const auto& x : rays.rays[i]) normal.push_back(Rational(x));
    hs.push_back(HalfSpace::make(normal, Rational(1)));
  }
  return hs;
}

Rational form_value(const CanonicalRaySet&, const Rational& offset, const IntVector& n,
                    const std::pair<Rational, RatVector>& vertex) {
  return dot(vertex.second, n) - offset * vertex.first;
}

}  // namespace

Rational mu_of_support_vector(const MultiplierProfile& profile, const Polytope& p, const IntVector& n) {
  const Rational offset = p.min_support(n);
  std::optional<Rational> least_value;
  for (const auto& v : profile.vertices) {
    Rational val = form_value(profile.rays, offset, n, v);
    if (!least_value || val < *least_value) least_value = val;
  }
  if (*least_value < Rational(1)) throw std::logic_error("invariant violation: form below 1 on the dilation polyhedron");
  if (*least_value > Rational(1)) throw std::domain_error("not a support vector at any dilation");
  std::optional<Rational> best;
  for (const auto& v : profile.vertices) {
    if (form_value(profile.rays, offset, n, v) != Rational(1)) continue;
    if (!best || v.first < *best) best = v.first;
  }
  return *best;
}

Rational mu_of_support_vector(const Polytope& p, const IntVector& n) {
  return mu_of_support_vector(multiplier_profile(p), p, n);
}

MultiplierProfile multiplier_profile(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::domain_error("multipliers require full dimension");
  const size_t d = p.ambient_dim();
  CanonicalRaySet rays = canonical_rays(p);
  HPolyhedron fan(fan_halfspaces(rays), d + 1);
  if (fan.is_empty()) throw std::logic_error("invariant violation: empty dilation polyhedron");

  MultiplierProfile prof{d, std::move(rays), std::move(fan), {}, {}, {}, {}, {}};
  for (const auto& v : prof.fan_polyhedron.vertices()) {
    RatVector x(v.begin() + 1, v.end());
    prof.vertices.emplace_back(v[0], std::move(x));
  }
  if (prof.fan_polyhedron.rays() != cone_over(p).rays)
    throw std::logic_error("invariant violation: recession cone differs from cone(P)");
  if (prof.fan_polyhedron.facet_count() != prof.rays.rays.size())
    throw std::logic_error("invariant violation: facet count differs from canonical ray count");

  prof.mu = prof.vertices.front().first;
  prof.mu_max = prof.mu;
  for (const auto& [x0, x] : prof.vertices) {
    prof.mu = std::min(prof.mu, x0);
    prof.mu_max = std::max(prof.mu_max, x0);
    prof.special_multipliers.push_back(x0);
  }
  std::sort(prof.special_multipliers.begin(), prof.special_multipliers.end());
  prof.special_multipliers.erase(std::unique(prof.special_multipliers.begin(), prof.special_multipliers.end()),
                                 prof.special_multipliers.end());

  bool first = true;
  for (const auto& f : p.facets()) {
    Rational m = mu_of_support_vector(prof, p, f.normal);
    if (first || m > prof.mu_cc) prof.mu_cc = m;
    first = false;
  }
  return prof;
}

Polytope fine_of_dilation(const MultiplierProfile& profile, const Rational& lambda) {
  if (lambda.sign() < 0) throw std::invalid_argument("negative dilation factor");
  std::vector<HalfSpace> hs;
  hs.reserve(profile.rays.rays.size());
  for (size_t i = 0; i < profile.rays.rays.size(); ++i)
    hs.push_back({profile.rays.rays[i], lambda * profile.rays.offsets[i] + Rational(1)});
  return bounded_intersection(hs, profile.dim);
}

Polytope fine_of_dilation(const Polytope& p, const Rational& lambda) {
  return fine_of_dilation(multiplier_profile(p), lambda);
}

bool is_F_hollow(const MultiplierProfile& profile) { return profile.mu > Rational(1); }
bool is_F_hollow(const Polytope& p) { return is_F_hollow(multiplier_profile(p)); }

bool is_weakly_sporadic(const MultiplierProfile& profile) {
  return is_F_hollow(profile) && fine_of_dilation(profile, profile.mu).dim() == 0;
}
bool is_weakly_sporadic(const Polytope& p) { return is_weakly_sporadic(multiplier_profile(p)); }

bool reflexive_check(const Polytope& p) {
  if (!p.is_full_dimensional() || !p.is_lattice()) return false;
  auto interior = lattice_points(p, true);
  if (interior.size() != 1) return false;
  const RatVector x = to_rational(interior.front());
  for (const auto& f : p.facets())
    if (f.offset != dot(x, f.normal) - Rational(1)) return false;
  return true;
}

std::optional<GorensteinData> gorenstein_data(const MultiplierProfile& profile, const Polytope& p) {
  if (!p.is_lattice() || profile.vertices.size() != 1) return std::nullopt;
  const auto& [k, x] = profile.vertices.front();
  if (!k.is_integer() || !is_integral(x)) return std::nullopt;
  GorensteinData g{k.num(), to_integer(x)};
  RatVector shift(x.size());
  for (size_t i = 0; i < x.size(); ++i) shift[i] = -x[i];
  if (!reflexive_check(translate(dilate(p, k), shift)))
    throw std::logic_error("invariant violation: Gorenstein vertex without reflexive dilate");
  return g;
}

std::optional<GorensteinData> gorenstein_data(const Polytope& p) {
  return gorenstein_data(multiplier_profile(p), p);
}

}  // namespace fhollow
