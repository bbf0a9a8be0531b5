#include <gtest/gtest.h>

#include <random>

#include "planeform/oracle.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/symmetricity.hpp"
#include "support.hpp"

using namespace planeform;
using namespace planeform::testing;

TEST(OracleGroup, Orders) {
  EXPECT_EQ(oracle::oracle_group(cube_vertices()).size(), 48u);
  EXPECT_EQ(oracle::oracle_group(solid(Solid::Icosahedron)).size(), 120u);
  std::mt19937_64 rng(9);
  EXPECT_EQ(oracle::oracle_group(random_points(12, rng)).size(), 1u);
}

TEST(OracleGroup, ElementsPermuteThePoints) {
  const auto pts = solid(Solid::Dodecahedron);
  const Configuration cfg(pts);
  for (const auto& g : oracle::oracle_group(pts)) {
    EXPECT_TRUE(is_orthogonal(g));
    for (const auto& p : pts) EXPECT_TRUE(cfg.find(g * p));
  }
}

TEST(OracleSubgroups, SmallGroups) {
  EXPECT_EQ(oracle::oracle_subgroups(canonical_group(Ch(2))).size(), 5u);
  EXPECT_EQ(oracle::oracle_subgroups({Mat3::Identity()}).size(), 1u);
  for (const auto& s : oracle::oracle_subgroups(canonical_group(simple(Family::Td)))) EXPECT_EQ(24 % s.size(), 0u);
}

TEST(OracleSubgroups, LargeGroupThrows) {
  EXPECT_THROW((void)oracle::oracle_subgroups(canonical_group(simple(Family::Ih))), Error);
}

TEST(OracleFreeOrbits, CubeExamples) {
  const auto pts = cube_vertices();
  const auto rho = symmetricity(Configuration(pts));
  EXPECT_TRUE(oracle::oracle_free_orbits(pts, Vec3::Zero(), rho.witnesses.at(Ch(4))));
  EXPECT_FALSE(oracle::oracle_free_orbits(pts, Vec3::Zero(), canonical_group(simple(Family::O))));
  EXPECT_TRUE(oracle::oracle_free_orbits(pts, Vec3::Zero(), {Mat3::Identity()}));
}

TEST(OracleSeb, KnownBalls) {
  const auto b = oracle::oracle_seb(cube_vertices());
  EXPECT_LT(b.center.norm(), 1e-12);
  EXPECT_NEAR(b.radius, std::sqrt(3.0), 1e-12);
  const auto two = oracle::oracle_seb({Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(1, 0.5, 0)});
  EXPECT_LT((two.center - Vec3(1, 0, 0)).norm(), 1e-12);
  EXPECT_NEAR(two.radius, 1.0, 1e-12);
}

TEST(Compare, DodecahedronPasses) {
  const auto c = oracle::compare(solid(Solid::Dodecahedron));
  EXPECT_TRUE(c.pass()) << c.detail;
  EXPECT_EQ(c.library_order, 120u);
  EXPECT_EQ(c.oracle_order, 120u);
}

TEST(Compare, SymmetricRandomInstancesPass) {
  std::mt19937_64 rng(61);
  for (const auto& l : {C(3), Ch(2), Cv(4), D(3), Dh(2), Dv(2), S(4), S(6), simple(Family::Td)}) {
    const auto c = oracle::compare(random_symmetric(l, 2, rng));
    EXPECT_TRUE(c.pass()) << l.str() << ": " << c.detail;
    EXPECT_TRUE(c.subgroups_checked);
  }
}

TEST(Compare, TooManyPointsThrows) {
  std::mt19937_64 rng(1);
  EXPECT_THROW((void)oracle::compare(random_points(61, rng)), Error);
}
