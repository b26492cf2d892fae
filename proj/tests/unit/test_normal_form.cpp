#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fhollow/ehrhart.hpp"
#include "fhollow/lattice_width.hpp"
#include "fhollow/named.hpp"
#include "fhollow/normal_form.hpp"
#include "test_support.hpp"

using namespace fhollow;
using fhollow::testing::hull;
using fhollow::testing::rv;

TEST(NormalForm, Examples) {
  EXPECT_NE(affine_normal_form(named::simplex(2)).digest, affine_normal_form(named::dilated_simplex(2, 2)).digest);
  EXPECT_EQ(affine_normal_form(hull({{0, 0}, {1, 0}, {0, 2}})), affine_normal_form(hull({{0, 0}, {2, 0}, {0, 1}})));
  EXPECT_THROW(affine_normal_form(hull({{0, 0}, {1, 1}})), std::domain_error);
  EXPECT_THROW(affine_normal_form(fhollow::testing::rat_hull({{"0", "0"}, {"1/2", "0"}, {"0", "1"}})),
               std::domain_error);
}

TEST(NormalForm, InvariantUnderRandomAffineUnimodularMaps) {
  std::mt19937_64 rng(79);
  auto corpus = fhollow::testing::property_corpus(40, 79);
  for (const auto& e : corpus) {
    if (!e.polytope.is_lattice()) continue;
    NormalForm nf = affine_normal_form(e.polytope);
    for (int t = 0; t < 100; ++t) {
      NormalForm other = affine_normal_form(fhollow::testing::random_affine_image(e.polytope, rng));
      ASSERT_EQ(other, nf) << e.name;
      ASSERT_EQ(other.digest, nf.digest) << e.name;
    }
  }
}

TEST(NormalForm, Deterministic) {
  Polytope p = named::axis_simplex({2, 3, 6});
  NormalForm a = affine_normal_form(p);
  NormalForm b = affine_normal_form(p);
  EXPECT_EQ(a.canonical_vertices, b.canonical_vertices);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.digest.size(), 32u);
}

TEST(NormalForm, SeparatesPolytopesWithDifferentInvariants) {
  std::mt19937_64 rng(83);
  std::vector<Polytope> sample;
  for (int t = 0; t < 120; ++t) sample.push_back(fhollow::testing::random_subpolytope(named::axis_simplex({3, 3, 3}), rng));
  struct Inv {
    std::vector<Integer> h;
    Rational width;
    size_t vertices;
    auto operator<=>(const Inv&) const = default;
  };
  std::map<std::string, Inv> seen;
  for (const auto& p : sample) {
    Inv inv{hstar(p).coefficients, lattice_width(p).width, p.vertices().size()};
    NormalForm nf = affine_normal_form(p);
    auto [it, fresh] = seen.emplace(nf.digest, inv);
    if (!fresh) EXPECT_TRUE(it->second == inv);
  }
}

TEST(AreEquivalent, Examples) {
  Polytope p = named::axis_simplex({2, 4, 4});
  EXPECT_TRUE(are_equivalent(p, translate(p, rv({"3", "-1", "2"}))));
  EXPECT_TRUE(are_equivalent(named::simplex(3), pyramid(named::simplex(2))));
  EXPECT_FALSE(are_equivalent(named::empty_simplex(1, 2), named::empty_simplex(1, 3)));
  EXPECT_FALSE(are_equivalent(named::simplex(2), named::simplex(3)));
  // Same volume, different classes.
  EXPECT_FALSE(are_equivalent(named::empty_simplex(1, 5), named::empty_simplex(2, 5)));
  EXPECT_TRUE(are_equivalent(named::empty_simplex(2, 5), named::empty_simplex(3, 5)));
}

TEST(Digest, SerializationIsStable) {
  IntMatrix m(1, 1);
  m(0, 0) = 0;
  std::string a = digest(m);
  EXPECT_EQ(a.size(), 32u);
  m(0, 0) = 1;
  EXPECT_NE(digest(m), a);
  IntMatrix wide(1, 2), tall(2, 1);
  EXPECT_NE(digest(wide), digest(tall));
  IntMatrix huge(1, 1);
  huge(0, 0) = Integer::parse("100000000000000000000");
  EXPECT_THROW(digest(huge), std::overflow_error);
}

TEST(PairingMatrix, EntriesAreLatticeDistances) {
  Polytope p = named::dilated_simplex(2, 2);
  IntMatrix m = pairing_matrix(p);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    int zeros = 0;
    for (size_t j = 0; j < 3; ++j) zeros += m(i, j).is_zero();
    EXPECT_EQ(zeros, 2);
  }
}
