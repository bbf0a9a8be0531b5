#pragma once

#include <string>
#include <vector>

#include "planeform/geometry.hpp"

// Slow reference implementations. Nothing here calls into the detection,
// subgroup or SEB code of the library, so they can be used to check it.
namespace planeform::oracle {

/// Every orthogonal map about the centroid that permutes the points, found by
/// sending one well-conditioned anchor triple to every congruent triple.
[[nodiscard]] std::vector<Mat3> oracle_group(const std::vector<Vec3>& points, double tol = kDefaultTolerance);

/// Every subgroup of `elements` as a sorted list of indices into it, found as
/// closures of all subsets of at most three elements. Throws for order > 48.
[[nodiscard]] std::vector<std::vector<std::size_t>> oracle_subgroups(const std::vector<Mat3>& elements);

/// All orbits of `subgroup` acting about `center` have exactly |subgroup| points.
[[nodiscard]] bool oracle_free_orbits(const std::vector<Vec3>& points, const Vec3& center,
                                      const std::vector<Mat3>& subgroup, double tol = kDefaultTolerance);

struct OracleBall {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

/// Smallest enclosing ball by trying every support set of 1 to 4 points.
[[nodiscard]] OracleBall oracle_seb(const std::vector<Vec3>& points, double tol = kDefaultTolerance);

struct Comparison {
  bool group_match = false;
  std::size_t library_order = 0;
  std::size_t oracle_order = 0;
  bool subgroups_checked = false;  // false when the group is too large for the oracle
  bool free_subgroups_match = true;
  std::size_t library_free = 0;
  std::size_t oracle_free = 0;
  std::vector<std::string> library_labels;  // symmetricity
  std::vector<std::string> oracle_labels;
  bool labels_match = true;
  std::string detail;

  [[nodiscard]] bool pass() const { return group_match && free_subgroups_match && labels_match; }
};

/// Differential check of symmetry detection and symmetricity against the
/// oracles. Throws for more than 60 points.
[[nodiscard]] Comparison compare(const std::vector<Vec3>& points, double tol = kDefaultTolerance);

}  // namespace planeform::oracle
