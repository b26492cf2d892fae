#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "fhollow/classify.hpp"
#include "fhollow/fine_interior.hpp"
#include "fhollow/named.hpp"
#include "test_support.hpp"

using namespace fhollow;
using fhollow::testing::hull;
using fhollow::testing::iv;
using fhollow::testing::rv;

namespace {

std::set<std::string> digests(const std::vector<SubpolytopeClass>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.form.digest);
  return out;
}

// Classes of hulls of all subsets of the lattice points of root.
std::set<std::string> subset_oracle(const Polytope& root) {
  auto pts = lattice_points(root);
  std::set<std::string> out;
  for (size_t mask = 1; mask < (size_t{1} << pts.size()); ++mask) {
    std::vector<IntVector> pick;
    for (size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1) pick.push_back(pts[i]);
    Polytope q = Polytope::convex_hull(pick);
    if (q.is_full_dimensional()) out.insert(affine_normal_form(q).digest);
  }
  return out;
}

Polytope normalized_translate(const Polytope& p) {
  RatVector shift = p.vertices().front();
  for (auto& x : shift) x = -x;
  return translate(p, shift);
}

bool same_up_to_translation(const Polytope& a, const Polytope& b) {
  return a.ambient_dim() == b.ambient_dim() && normalized_translate(a) == normalized_translate(b);
}

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fhollow_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(SubpolytopeClasses, Examples) {
  EXPECT_EQ(subpolytope_classes(named::simplex(2)).size(), 1u);
  EXPECT_EQ(subpolytope_classes(named::cube(2)).size(), 2u);
  Polytope root = named::dilated_simplex(2, 2);
  EXPECT_EQ(digests(subpolytope_classes(root)), subset_oracle(root));
  EXPECT_THROW(subpolytope_classes(hull({{0, 0}, {1, 1}})), std::domain_error);
}

TEST(SubpolytopeClasses, MatchesSubsetOracleOnLargerRoots) {
  for (const auto& root : {named::dilated_simplex(2, 3), named::cube(3), hull({{0, 0}, {3, 0}, {0, 2}, {3, 2}})})
    EXPECT_EQ(digests(subpolytope_classes(root)), subset_oracle(root));
}

TEST(SubpolytopeClasses, IndependentOfJobCount) {
  Polytope root = named::axis_simplex({3, 3, 3});
  EnumerationOptions one, four;
  four.jobs = 4;
  auto a = subpolytope_classes(root, one);
  auto b = subpolytope_classes(root, four);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].form, b[i].form);
    EXPECT_EQ(a[i].points, b[i].points);
  }
}

TEST(SubpolytopeClasses, NoTwoClassesEquivalent) {
  auto cs = subpolytope_classes(named::axis_simplex({2, 2, 2}));
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].points.size() != cs[j].points.size()) continue;
      EXPECT_FALSE(are_equivalent(cs[i].polytope, cs[j].polytope));
    }
}

TEST(DedupStore, ResumeReplaysLogAndIgnoresTruncatedLine) {
  auto log = temp_path("dedup.log");
  std::vector<NormalForm> forms;
  {
    DedupStore store(log, false);
    for (const auto& p : {named::simplex(2), named::cube(2), named::dilated_simplex(2, 2)}) {
      NormalForm nf = affine_normal_form(p);
      EXPECT_TRUE(store.insert(nf, lattice_points(p), "root"));
      EXPECT_FALSE(store.insert(nf, lattice_points(p), "again"));
      forms.push_back(nf);
    }
    store.mark_expanded(forms[0]);
  }
  {
    std::ofstream out(log, std::ios::app);
    out << "D 0123456789abcdef";  // interrupted write
  }
  {
    DedupStore store(log, true);
    EXPECT_EQ(store.size(), 3u);
    auto es = store.entries();
    EXPECT_TRUE(es[0].expanded);
    EXPECT_FALSE(es[1].expanded);
    for (const auto& f : forms) EXPECT_TRUE(store.contains(f));
    EXPECT_EQ(es[2].points, lattice_points(named::dilated_simplex(2, 2)));
    EXPECT_EQ(es[0].provenance, "root");
  }
  DedupStore fresh(log, false);
  EXPECT_EQ(fresh.size(), 0u);
}

TEST(DedupStore, InterruptedEnumerationResumesToSameClasses) {
  Polytope root = named::axis_simplex({2, 3, 3});
  auto full = subpolytope_classes(root);
  auto log = temp_path("enum.log");
  {
    DedupStore store(log, false);
    EnumerationOptions o;
    o.store = &store;
    subpolytope_classes(root, o);
  }
  // Keep only the first third of the log to simulate an interruption.
  std::vector<std::string> lines;
  {
    std::ifstream in(log);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  {
    std::ofstream out(log, std::ios::trunc);
    for (size_t i = 0; i < lines.size() / 3; ++i) out << lines[i] << "\n";
  }
  DedupStore store(log, true);
  EnumerationOptions o;
  o.store = &store;
  auto resumed = subpolytope_classes(root, o);
  EXPECT_EQ(digests(resumed), digests(full));
  EXPECT_EQ(resumed.size(), full.size());
}

TEST(Projection, Examples) {
  EXPECT_TRUE(projects_to_2delta2(named::prism_2delta2_0_4()));
  EXPECT_TRUE(projects_to_2delta2(named::dilated_simplex(3, 2)));
  EXPECT_FALSE(projects_to_2delta2(named::axis_simplex({3, 3, 3})));
  try {
    projects_to_2delta2(named::cube(3));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "use width-1 projection predicate");
  }
}

TEST(Sporadic, Examples) {
  EXPECT_TRUE(is_sporadic(named::axis_simplex({2, 3, 6})));
  EXPECT_FALSE(is_sporadic(named::cube(3)));
  EXPECT_FALSE(is_sporadic(named::dilated_simplex(3, 2)));
}

TEST(MinkowskiSummands, Examples) {
  Polytope r = named::dilated_simplex(2, 3);
  auto pairs = minkowski_summand_pairs(r);
  auto has = [&](const Polytope& a, const Polytope& b) {
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto& ab) {
      return same_up_to_translation(ab.first, a) && same_up_to_translation(ab.second, b);
    });
  };
  EXPECT_TRUE(has(named::simplex(2), named::dilated_simplex(2, 2)));
  EXPECT_TRUE(has(named::dilated_simplex(2, 2), named::simplex(2)));
  EXPECT_TRUE(has(r, hull({{0, 0}})));
  for (const auto& [a, b] : pairs) EXPECT_EQ(minkowski_sum(a, b), r);

  Polytope sq = named::cube(2);
  auto sq_pairs = minkowski_summand_pairs(sq);
  EXPECT_TRUE(std::any_of(sq_pairs.begin(), sq_pairs.end(), [&](const auto& ab) {
    return same_up_to_translation(ab.first, hull({{0, 0}, {1, 0}})) &&
           same_up_to_translation(ab.second, hull({{0, 0}, {0, 1}}));
  }));
  for (const auto& [a, b] : sq_pairs) EXPECT_EQ(minkowski_sum(a, b), sq);

  EXPECT_THROW(minkowski_summand_pairs(fhollow::testing::rat_hull({{"0", "0"}, {"1/2", "0"}, {"0", "1"}})),
               std::domain_error);
}

TEST(MinkowskiSummands, HexagonDecompositions) {
  Polytope hex = hull({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
  auto pairs = minkowski_summand_pairs(hex);
  for (const auto& [a, b] : pairs) EXPECT_EQ(minkowski_sum(a, b), hex);
  // Two triangles and three segments sums both occur.
  EXPECT_TRUE(std::any_of(pairs.begin(), pairs.end(),
                          [](const auto& ab) { return ab.first.vertices().size() == 3 && ab.second.vertices().size() == 3; }));
  EXPECT_TRUE(std::any_of(pairs.begin(), pairs.end(),
                          [](const auto& ab) { return ab.first.dim() == 1 && ab.second.vertices().size() == 4; }));
}

TEST(ClassifyPolygons, FourClasses) {
  auto recs = classify_polygons();
  ASSERT_EQ(recs.size(), 4u);
  std::vector<Polytope> expect{named::simplex(2), hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                               hull({{0, 0}, {2, 0}, {0, 1}}), named::dilated_simplex(2, 2)};
  for (const auto& e : expect) {
    auto it = std::find_if(recs.begin(), recs.end(), [&](const auto& r) { return r.form == affine_normal_form(e); });
    ASSERT_NE(it, recs.end());
    EXPECT_TRUE(it->weakly_sporadic);
  }
  auto two = std::find_if(recs.begin(), recs.end(),
                          [&](const auto& r) { return r.form == affine_normal_form(named::dilated_simplex(2, 2)); });
  EXPECT_EQ(two->mu, Rational::parse("3/2"));
  auto p20 = std::find_if(recs.begin(), recs.end(),
                          [&](const auto& r) { return r.form == affine_normal_form(hull({{0, 0}, {2, 0}, {0, 1}})); });
  EXPECT_EQ(p20->mu, Rational(2));
  EXPECT_EQ(p20->dim_fine_at_mu, 0);
  EXPECT_TRUE(std::is_sorted(recs.begin(), recs.end(),
                             [](const auto& a, const auto& b) { return a.form.digest < b.form.digest; }));
}

TEST(ClassifyPolygons, RecordsAreReproducible) {
  for (const auto& r : classify_polygons()) {
    ClassificationRecord again = make_record(Polytope::convex_hull(r.vertices), r.provenance);
    EXPECT_EQ(to_result_line(again), to_result_line(r));
  }
}

TEST(ReflexivePolygons, SixteenClasses) {
  auto polys = reflexive_polygons();
  EXPECT_EQ(polys.size(), 16u);
  for (const auto& p : polys) {
    EXPECT_TRUE(reflexive_check(p));
    EXPECT_EQ(lattice_points(p, true).size(), 1u);
  }
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j) EXPECT_FALSE(are_equivalent(polys[i], polys[j]));
}

TEST(Bipyramid, Examples) {
  std::vector<IntVector> bi{iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 0}), iv({0, 0, 1}), iv({0, 0, -1})};
  EXPECT_TRUE(is_bipyramid(bi));
  // Apexes on the same side.
  std::vector<IntVector> same{iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 0}), iv({0, 0, 1}), iv({1, 1, 2})};
  EXPECT_FALSE(is_bipyramid(same));
  // Square pyramid: no triangle separates the remaining two.
  std::vector<IntVector> pyr{iv({0, 0, 0}), iv({2, 0, 0}), iv({0, 2, 0}), iv({2, 2, 0}), iv({1, 1, 1})};
  EXPECT_FALSE(is_bipyramid(pyr));
  EXPECT_FALSE(is_bipyramid(named::axis_simplex({3, 3, 3}).lattice_vertices()));
  EXPECT_FALSE(is_bipyramid(named::prism_2delta2_0_4().lattice_vertices()));
}

TEST(MuHistogram, CountsPerValue) {
  auto h = mu_histogram(classify_polygons());
  size_t total = 0;
  for (const auto& [mu, n] : h) total += n;
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(h.at(Rational::parse("3/2")), 1u);
}
