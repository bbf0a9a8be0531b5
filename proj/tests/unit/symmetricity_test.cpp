#include <gtest/gtest.h>

#include <random>

#include "planeform/oracle.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/symmetricity.hpp"
#include "support.hpp"

using namespace planeform;
using namespace planeform::testing;

namespace {

Symmetricity rho_of(Solid s) { return symmetricity(Configuration(solid(s))); }

const Label kT = simple(Family::T);

}  // namespace

TEST(Subgroups, TrivialGroup) {
  std::mt19937_64 rng(1);
  const PointGroup g = detect_symmetries(Configuration(random_points(7, rng)));
  ASSERT_EQ(g.order(), 1u);
  EXPECT_EQ(enumerate_subgroups(g).size(), 1u);
}

TEST(Subgroups, C2hByExhaustiveSubsets) {
  const PointGroup g = make_group(canonical_group(Ch(2)), Vec3::Zero());
  ASSERT_EQ(g.order(), 4u);
  std::size_t closed = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Mat3> subset;
    for (unsigned i = 0; i < 4; ++i)
      if (mask & (1u << i)) subset.push_back(g.elements[i]);
    closed += is_closed(subset);
  }
  EXPECT_EQ(closed, 5u);
  const auto subs = enumerate_subgroups(g);
  EXPECT_EQ(subs.size(), 5u);
  std::vector<Label> labels;
  for (const auto& s : subs) labels.push_back(classify(s));
  EXPECT_EQ(sorted(labels), sorted({C1(), C(2), Cs(), Ci(), Ch(2)}));
}

TEST(Subgroups, OhCountMatchesOracle) {
  const PointGroup g = detect_symmetries(Configuration(cube_vertices()));
  const auto subs = enumerate_subgroups(g);
  EXPECT_EQ(subs.size(), oracle::oracle_subgroups(g.elements).size());
  for (const auto& s : subs) EXPECT_EQ(48 % s.size(), 0u);
}

TEST(Symmetricity, Cube) {
  const auto rho = symmetricity(Configuration(cube_vertices()));
  EXPECT_EQ(sorted(rho.maximal), sorted({D(4), Dh(2), Dv(2), Ch(4), S(4)}));
}

TEST(Symmetricity, Icosahedron) { EXPECT_EQ(sorted(rho_of(Solid::Icosahedron).maximal), sorted({kT, D(3), S(6)})); }

TEST(Symmetricity, Icosidodecahedron) {
  EXPECT_EQ(sorted(rho_of(Solid::Icosidodecahedron).maximal), sorted({S(10), S(6)}));
}

TEST(Symmetricity, SolvableSolids) {
  EXPECT_EQ(sorted(rho_of(Solid::Tetrahedron).maximal), sorted({D(2), S(4)}));
  EXPECT_EQ(sorted(rho_of(Solid::Octahedron).maximal), sorted({D(3), S(6)}));
  EXPECT_EQ(sorted(rho_of(Solid::Dodecahedron).maximal), sorted({D(5), D(2), S(10)}));
}

TEST(Symmetricity, DownwardClosedWithFreeWitnesses) {
  for (Solid s : {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube, Solid::Icosahedron}) {
    const auto pts = solid(s);
    const Configuration cfg(pts);
    const auto rho = symmetricity(cfg);
    EXPECT_TRUE(contains_label(rho.all, C1()));
    for (const auto& l : rho.all) {
      ASSERT_TRUE(rho.witnesses.count(l)) << l.str();
      const auto& w = rho.witnesses.at(l);
      EXPECT_EQ(classify(w), l);
      EXPECT_TRUE(acts_freely(cfg, rho.theta.center, w));
      EXPECT_TRUE(oracle::oracle_free_orbits(pts, rho.theta.center, w));
    }
    for (const auto& l : rho.all) {
      bool below_maximal = false;
      for (const auto& m : rho.maximal) below_maximal = below_maximal || is_subgroup(l, m);
      EXPECT_TRUE(below_maximal) << to_string(s) << " " << l.str();
    }
  }
}

TEST(Symmetricity, CenterRobotLeavesOnlyTrivialGroup) {
  const auto rho = symmetricity(Configuration(concat(cube_vertices(), {Vec3::Zero()})));
  EXPECT_TRUE(rho.center_occupied);
  EXPECT_EQ(rho.maximal, (std::vector<Label>{C1()}));
}

TEST(Solvability, UnsolvableSolids) {
  const auto cube = is_solvable(Configuration(cube_vertices()));
  EXPECT_FALSE(cube.solvable);
  ASSERT_TRUE(cube.certificate);
  EXPECT_EQ(*cube.certificate, Ch(4));
  const auto ico = is_solvable(Configuration(solid(Solid::Icosahedron)));
  EXPECT_FALSE(ico.solvable);
  ASSERT_TRUE(ico.certificate);
  EXPECT_EQ(*ico.certificate, kT);
}

TEST(Solvability, SolvableSolids) {
  for (Solid s : {Solid::Tetrahedron, Solid::Octahedron, Solid::Dodecahedron, Solid::Icosidodecahedron}) {
    const auto r = is_solvable(Configuration(solid(s)));
    EXPECT_TRUE(r.solvable) << to_string(s);
    EXPECT_FALSE(r.certificate);
  }
}

TEST(Solvability, ForbiddenLabels) {
  EXPECT_TRUE(forbidden(kT));
  EXPECT_TRUE(forbidden(simple(Family::O)));
  EXPECT_TRUE(forbidden(simple(Family::I)));
  EXPECT_TRUE(forbidden(Ch(4)));
  EXPECT_FALSE(forbidden(D(5)));
  EXPECT_FALSE(forbidden(S(10)));
  EXPECT_FALSE(forbidden(C1()));
}

TEST(Solvability, MaximalLabelsKeepSIncomparable) {
  EXPECT_EQ(sorted(maximal_labels({C1(), C(2), S(4), D(4)})), sorted({S(4), D(4)}));
  EXPECT_EQ(maximal_labels({C1(), C(2), C(4)}), (std::vector<Label>{C(4)}));
}
