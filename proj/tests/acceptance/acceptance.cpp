// Acceptance run: one PASS/FAIL line per criterion on stdout, details of
// every failed check on stderr. Exit status is the number of failed
// criteria.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "fhollow/classify.hpp"
#include "fhollow/ehrhart.hpp"
#include "fhollow/fine_interior.hpp"
#include "fhollow/lattice_width.hpp"
#include "fhollow/linalg.hpp"
#include "fhollow/named.hpp"
#include "fhollow/normal_form.hpp"
#include "fhollow_tools/commands.hpp"
#include "test_support.hpp"

using namespace fhollow;
using fhollow::testing::hull;
using fhollow::testing::rat_hull;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 20) std::cerr << "  criterion " << id_ << ": " << what << '\n';
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool passed() const { return failures_ == 0; }

  bool report() const {
    std::cout << (passed() ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " (" << checks_
              << " checks, " << failures_ << " failed";
    if (!notes_.empty()) std::cout << "; " << notes_;
    std::cout << ")" << std::endl;
    return passed();
  }

 private:
  int id_;
  std::string title_;
  size_t checks_ = 0;
  size_t failures_ = 0;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

bool run(Criterion& c, const std::function<void(Criterion&)>& body) {
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  return c.report();
}

const ClassificationRecord* find_class(const std::vector<ClassificationRecord>& recs, const Polytope& p) {
  NormalForm nf = affine_normal_form(p);
  for (const auto& r : recs)
    if (r.form == nf) return &r;
  return nullptr;
}

std::string histogram_text(const std::map<Rational, size_t>& h) {
  std::string s;
  for (const auto& [mu, n] : h) s += (s.empty() ? "" : " ") + mu.str() + ":" + std::to_string(n);
  return s;
}

int max_norm(const CanonicalRaySet& rs) {
  Integer m(0);
  for (const auto& r : rs.rays)
    for (const auto& x : r) m = std::max(m, abs(x));
  return static_cast<int>(m.to_int64());
}

Polytope point(std::initializer_list<const char*> x) { return rat_hull({x}); }

// ---------------------------------------------------------------- criteria

void polygons(Criterion& c) {
  auto t = std::chrono::steady_clock::now();
  auto recs = classify_polygons();
  double dt = seconds_since(t);
  c.note(std::to_string(recs.size()) + " classes in " + fmt_seconds(dt));
  c.check(recs.size() == 4, "expected 4 classes, got " + std::to_string(recs.size()));
  for (const auto& [name, p] : std::vector<std::pair<std::string, Polytope>>{
           {"Delta2", named::simplex(2)},
           {"P11", named::lawrence_prism({1, 1})},
           {"P20", named::lawrence_prism({2, 0})},
           {"2Delta2", named::dilated_simplex(2, 2)}})
    c.check(find_class(recs, p) != nullptr, name + " missing");
  c.check(dt < 1.0, "runtime " + fmt_seconds(dt) + " exceeds 1 s");
}

void width_two(Criterion& c) {
  auto t = std::chrono::steady_clock::now();
  auto recs = classify_weakly_sporadic_width2();
  double dt = seconds_since(t);
  auto hist = mu_histogram(recs);
  c.note(std::to_string(recs.size()) + " classes; mu " + histogram_text(hist) + "; " + fmt_seconds(dt) +
         " single-threaded");
  c.check(recs.size() == 80, "expected 80 classes, got " + std::to_string(recs.size()));
  c.check(hist == std::map<Rational, size_t>{{Rational(3, 2), 79}, {Rational(2), 1}},
          "histogram " + histogram_text(hist));
  const auto* two = find_class(recs, named::dilated_simplex(3, 2));
  c.check(two && two->mu == Rational(2), "2Delta3 with mu = 2 missing");
  c.check(find_class(recs, hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 4}})) != nullptr, "2P200 missing");
  for (const auto& r : recs)
    c.check(r.weakly_sporadic && !r.sporadic && r.width == Integer(2) && r.dim_fine_at_mu == 0,
            "record flags of " + r.form.digest);
  c.check(dt < 600.0, "runtime " + fmt_seconds(dt) + " exceeds 10 min");
}

void weakly_sporadic(Criterion& c) {
  auto t = std::chrono::steady_clock::now();
  auto recs = classify_weakly_sporadic_all();
  double dt = seconds_since(t);
  std::map<Integer, size_t> gor;
  size_t width2_32 = 0, five_halves = 0, others = 0;
  for (const auto& r : recs) {
    if (r.gorenstein) ++gor[r.gorenstein->index];
    if (r.width == Integer(2) && r.mu == Rational(3, 2)) ++width2_32;
    else if (r.mu == Rational(5, 2)) ++five_halves;
    else if (!r.gorenstein) ++others;
  }
  std::string gtext;
  for (const auto& [k, n] : gor) gtext += (gtext.empty() ? "" : " ") + k.str() + ":" + std::to_string(n);
  c.note(std::to_string(recs.size()) + " classes; gorenstein " + gtext + "; " + fmt_seconds(dt));
  c.check(recs.size() == 114, "expected 114 classes, got " + std::to_string(recs.size()));
  c.check(gor == std::map<Integer, size_t>{{Integer(2), 31}, {Integer(3), 2}, {Integer(4), 1}},
          "gorenstein histogram " + gtext);
  c.check(five_halves == 1, "expected one class with mu = 5/2, got " + std::to_string(five_halves));
  c.check(width2_32 == 79, "expected 79 width-2 classes with mu = 3/2, got " + std::to_string(width2_32));
  c.check(others == 0, std::to_string(others) + " classes outside the breakdown");
  for (const auto& r : recs)
    if (r.mu == Rational(5, 2))
      c.check(are_equivalent(Polytope::convex_hull(r.vertices), pyramid(named::dilated_simplex(2, 2))),
              "the mu = 5/2 class is not Pyr(2Delta2)");
  for (const auto& r : recs) c.check(r.weakly_sporadic && !r.sporadic, "flags of " + r.form.digest);
}

void sporadic(Criterion& c) {
  auto t = std::chrono::steady_clock::now();
  PipelineOptions o;
  o.jobs = 4;
  auto recs = classify_sporadic(o);
  double dt = seconds_since(t);
  auto hist = mu_histogram(recs);
  size_t bi = bipyramid_census(recs);
  c.note(std::to_string(recs.size()) + " classes; mu " + histogram_text(hist) + "; bipyramids " +
         std::to_string(bi) + "; " + fmt_seconds(dt));
  c.check(recs.size() == 1368, "expected 1368 classes, got " + std::to_string(recs.size()));
  c.check(hist == std::map<Rational, size_t>{{Rational(7, 6), 436}, {Rational(5, 4), 632}, {Rational(4, 3), 300}},
          "histogram " + histogram_text(hist));
  c.check(bi == 52, "bipyramid census " + std::to_string(bi));
  for (const auto& [k, mu] : std::vector<std::pair<std::vector<int>, Rational>>{
           {{3, 3, 3}, Rational(4, 3)}, {{2, 4, 4}, Rational(5, 4)}, {{2, 3, 6}, Rational(7, 6)}}) {
    const auto* r = find_class(recs, named::axis_simplex(k));
    c.check(r && r->mu == mu, "root simplex missing or wrong mu");
  }
  c.check(dt < 3600.0, "runtime " + fmt_seconds(dt) + " exceeds 60 min");
}

void named_multipliers(Criterion& c, const std::vector<fhollow::testing::CorpusEntry>& corpus) {
  for (const auto& [k, mu] : std::vector<std::pair<std::vector<int>, Rational>>{
           {{3, 3, 3}, Rational(4, 3)}, {{2, 4, 4}, Rational(5, 4)}, {{2, 3, 6}, Rational(7, 6)}}) {
    Polytope p = named::axis_simplex(k);
    MultiplierProfile prof = multiplier_profile(p);
    c.check(prof.mu == mu, "mu of an axis simplex is " + prof.mu.str());
    c.check(fine_of_dilation(prof, mu) == point({"1", "1", "1"}), "F(mu P) is not {(1,1,1)}");
  }
  size_t pyramids = 0;
  for (const auto& e : corpus) {
    if (pyramids == 20) break;
    if (!e.polytope.is_lattice() || e.polytope.ambient_dim() > 3) continue;
    Rational mu = multiplier_profile(e.polytope).mu;
    if (mu < Rational(1)) continue;
    Rational pmu = multiplier_profile(pyramid(e.polytope)).mu;
    c.check(pmu == mu + Rational(1), "mu(Pyr " + e.name + ") = " + pmu.str() + ", mu = " + mu.str());
    ++pyramids;
  }
  c.check(pyramids == 20, "pyramid corpus has only " + std::to_string(pyramids) + " members");
  Polytope four = named::four_simplex_example();
  MultiplierProfile prof = multiplier_profile(four);
  c.check(prof.mu == Rational(1), "4-simplex mu = " + prof.mu.str());
  c.check(prof.mu_max == Rational(4, 3), "4-simplex mu_max = " + prof.mu_max.str());
  c.check(is_canonically_closed(four), "4-simplex not canonically closed");
  c.check(prof.mu_cc <= Rational(1), "4-simplex mu_cc = " + prof.mu_cc.str());
  c.note("pyramid corpus " + std::to_string(pyramids) + "; 4-simplex mu_cc " + prof.mu_cc.str());
}

void oracle_suite(Criterion& c, const std::vector<fhollow::testing::CorpusEntry>& corpus) {
  std::mt19937_64 rng(6);
  size_t width_one = 0;
  for (const auto& e : corpus) {
    const Polytope& p = e.polytope;
    FineResult fr = fine_interior(p);
    const int b = max_norm(fr.defining_rays);
    for (int bound : {b, b + 1})
      c.check(fine_interior_bruteforce(p, bound) == fr.polytope,
              e.name + ": brute-force oracle differs at B=" + std::to_string(bound));

    MultiplierProfile prof = multiplier_profile(p);
    const auto& hs = prof.fan_polyhedron.halfspaces();
    const size_t n = prof.dim + 1;
    for (const auto& [x0, x] : prof.vertices) {
      RatVector v{x0};
      v.insert(v.end(), x.begin(), x.end());
      std::vector<IntVector> picked;
      std::vector<size_t> rows;
      for (size_t i = 0; i < hs.size() && rows.size() < n; ++i) {
        if (!hs[i].slack(v).is_zero()) continue;
        picked.push_back(hs[i].normal);
        if (rank(std::span<const IntVector>(picked)) == picked.size()) rows.push_back(i);
        else picked.pop_back();
      }
      if (rows.size() != n) {
        c.check(false, e.name + ": vertex without " + std::to_string(n) + " independent tight rows");
        continue;
      }
      RatMatrix a(n, n), a0(n, n);
      RatVector rhs;
      for (size_t r = 0; r < n; ++r) {
        for (size_t k = 0; k < n; ++k) a(r, k) = a0(r, k) = Rational(hs[rows[r]].normal[k]);
        rhs.push_back(hs[rows[r]].offset);
        a0(r, 0) = hs[rows[r]].offset;
      }
      auto sol = solve_square(a, rhs);
      c.check(sol && *sol == v, e.name + ": Cramer recomputation differs");
      c.check(determinant(a0) / determinant(a) == x0, e.name + ": determinant ratio differs");
    }

    c.check(prof.fan_polyhedron.rays() == cone_over(p).rays, e.name + ": recession cone differs from cone(P)");
    c.check(prof.fan_polyhedron.facet_count() == prof.rays.rays.size(), e.name + ": facet count differs");
    for (int t = 0; t < 10; ++t) {
      Rational lambda = fhollow::testing::random_rational(rng, 0, 4);
      c.check(fine_of_dilation(prof, lambda) == fine_interior(dilate(p, lambda)).polytope,
              e.name + ": slice identity fails at " + lambda.str());
    }
    Polytope base = fine_of_dilation(prof, prof.mu_max);
    for (int l : {2, 3})
      c.check(fine_of_dilation(prof, Rational(l) * prof.mu_max) ==
                  minkowski_sum(base, dilate(p, Rational(l - 1) * prof.mu_max)),
              e.name + ": Minkowski decomposition fails at " + std::to_string(l));

    if (p.ambient_dim() == 3 && p.is_lattice() && lattice_width(p).width == Rational(1)) {
      Polytope twice = dilate(p, Rational(2));
      auto inner = lattice_points(twice, true);
      Polytope f = fine_interior(twice).polytope;
      c.check(inner.empty() ? f.is_empty() : f == Polytope::convex_hull(inner),
              e.name + ": width-1 identity fails");
      ++width_one;
    }
  }
  c.check(width_one >= 10, "only " + std::to_string(width_one) + " width-1 members");

  size_t table = 0;
  for (int q = 2; q <= 7; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Polytope s = named::empty_simplex(p, q);
      int expect = q == 2 ? 0 : ((p == 1 || p == q - 1) ? 1 : 2);
      int got = fine_interior(dilate(s, Rational(2))).polytope.dim();
      c.check(got == expect, "dim F(2 Delta(" + std::to_string(p) + "," + std::to_string(q) + ")) = " +
                                 std::to_string(got));
      ++table;
    }

  Polytope ce = named::slice_counterexample();
  SliceResult s = slice(ce, fhollow::testing::iv({0, 0, 1}), Rational(0));
  c.check(s.embedded == rat_hull({{"-1/2", "-1/2", "0"}, {"1/2", "0", "0"}, {"0", "1/2", "0"}}),
          "counterexample slice differs");
  std::vector<RatVector> flat;
  for (const auto& v : s.embedded.vertices()) flat.push_back({v[0], v[1]});
  c.check(fine_interior(Polytope::convex_hull(flat)).polytope.is_empty(), "F of the slice is not empty");
  c.check(fine_interior(ce).polytope == point({"0", "0", "0"}), "F(P) is not {(0,0,0)}");
  c.note(std::to_string(corpus.size()) + " polytopes; " + std::to_string(width_one) + " width-1; " +
         std::to_string(table) + " empty simplices");
}

void invariant_suite(Criterion& c, const std::vector<fhollow::testing::CorpusEntry>& corpus) {
  std::mt19937_64 rng(7);
  size_t mapped = 0, hollow = 0, simplices = 0;
  for (const auto& e : corpus) {
    const Polytope& p = e.polytope;
    if (!p.is_lattice()) continue;
    NormalForm nf = affine_normal_form(p);
    for (int t = 0; t < 100; ++t) {
      c.check(affine_normal_form(fhollow::testing::random_affine_image(p, rng)) == nf,
              e.name + ": normal form changed under a unimodular map");
      ++mapped;
    }
    MultiplierProfile prof = multiplier_profile(p);
    HStar h = hstar(p);
    if (is_F_hollow(prof)) {
      Rational lw = lattice_width(p).width;
      c.check(Rational(2) / lw <= prof.mu, e.name + ": 2/lw > mu");
      c.check(prof.mu <= Rational(h.codegree), e.name + ": mu > codegree");
      ++hollow;
    }
    if (p.vertices().size() == p.ambient_dim() + 1) {
      Integer sum(0);
      bool nonneg = true;
      for (const auto& x : h.coefficients) {
        sum += x;
        nonneg = nonneg && x.sign() >= 0;
      }
      c.check(h.coefficients.front() == Integer(1), e.name + ": h*_0 != 1");
      c.check(nonneg, e.name + ": negative h* coefficient");
      c.check(sum == normalized_volume(p), e.name + ": h* sum differs from normalized volume");
      ++simplices;
    }
  }
  auto refl = reflexive_polygons();
  c.check(refl.size() == 16, "reflexive polygons: " + std::to_string(refl.size()));
  c.note(std::to_string(mapped) + " mapped copies; " + std::to_string(hollow) + " F-hollow; " +
         std::to_string(simplices) + " simplices; " + std::to_string(refl.size()) + " reflexive polygons");
}

}  // namespace

int main() {
  const auto corpus = fhollow::testing::property_corpus(200);
  int failed = 0;
  {
    Criterion c(1, "polygon classification");
    failed += !run(c, polygons);
  }
  {
    Criterion c(2, "width-2 classification");
    failed += !run(c, width_two);
  }
  {
    Criterion c(3, "weakly sporadic classification");
    failed += !run(c, weakly_sporadic);
  }
  {
    Criterion c(4, "sporadic classification");
    failed += !run(c, sporadic);
  }
  {
    Criterion c(5, "named multipliers");
    failed += !run(c, [&](Criterion& cc) { named_multipliers(cc, corpus); });
  }
  {
    Criterion c(6, "oracle suite");
    failed += !run(c, [&](Criterion& cc) { oracle_suite(cc, corpus); });
  }
  {
    Criterion c(7, "invariant suite");
    failed += !run(c, [&](Criterion& cc) { invariant_suite(cc, corpus); });
  }
  return failed;
}
