#pragma once

#include <map>
#include <optional>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {

/// Every subgroup of the group as an element list, without duplicates.
[[nodiscard]] std::vector<std::vector<Mat3>> enumerate_subgroups(const PointGroup& group);

/// True when no non-identity element fixes a point of the configuration.
[[nodiscard]] bool acts_freely(const Configuration& cfg, const Vec3& center, const std::vector<Mat3>& elements);

struct Symmetricity {
  std::vector<Label> all;  // sorted, downward closed
  std::vector<Label> maximal;
  std::map<Label, std::vector<Mat3>> witnesses;  // one free subgroup per label in `all`
  bool center_occupied = false;
  PointGroup theta;
};

[[nodiscard]] Symmetricity symmetricity(const Configuration& cfg);
[[nodiscard]] Symmetricity symmetricity(const Configuration& cfg, const PointGroup& theta);

/// Maximal elements of a label set. An S label is only dominated by another S
/// label, since its rotoreflection plane never plays the role of a mirror.
[[nodiscard]] std::vector<Label> maximal_labels(const std::vector<Label>& labels);

/// Labels whose presence in the symmetricity rules out plane formation.
[[nodiscard]] bool forbidden(const Label& label);

struct Solvability {
  bool solvable = false;
  std::optional<Label> certificate;  // first obstruction found
  std::vector<Label> maximal;
};

[[nodiscard]] Solvability is_solvable(const Configuration& cfg);
[[nodiscard]] Solvability is_solvable(const Symmetricity& rho);

}  // namespace planeform
