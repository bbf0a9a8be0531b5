#pragma once

#include <cstddef>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {

struct ViewEntry {
  double altitude = 0.0;   // distance to the SEB centre over the SEB radius
  double latitude = 0.0;   // [0, pi], from the observer's direction
  double longitude = 0.0;  // [0, 2pi), from the prime meridian
};

using LocalView = std::vector<ViewEntry>;

/// Three-way comparison with the angle/altitude tolerances used for views.
[[nodiscard]] int compare_views(const LocalView& a, const LocalView& b);

/// Orbits of the group's action, each as sorted point indices.
[[nodiscard]] std::vector<std::vector<std::size_t>> orbits(const Configuration& cfg, const PointGroup& group);

[[nodiscard]] LocalView local_view(const Configuration& cfg, std::size_t observer);
[[nodiscard]] LocalView local_view(const Configuration& cfg, std::size_t observer, const Ball& enclosing);

struct OrbitDecomposition {
  std::vector<std::vector<std::size_t>> orbits;  // P1 .. Pm
  std::vector<double> radii;                     // distance of each orbit to the centre
  std::vector<LocalView> views;                  // only filled where radii tie
  std::vector<std::size_t> orbit_of;             // point index -> orbit index
  PointGroup group;
  Ball enclosing;
};

/// Orbits of the full symmetry group ordered by radius, then by view.
[[nodiscard]] OrbitDecomposition ordered_decomposition(const Configuration& cfg);
[[nodiscard]] OrbitDecomposition ordered_decomposition(const Configuration& cfg, const PointGroup& theta);

}  // namespace planeform
