#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/orbits.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {

/// Unsolvable marks a structure that admits no plane formation; robots then
/// make a symmetry-preserving move and settle instead of failing.
enum class Phase { Terminal, PrepCenter, PrepType1, PrepType2, GoToCenter, RemoveMirror, TwistPrism, FinalLanding, Unsolvable };

[[nodiscard]] std::string to_string(Phase p);
[[nodiscard]] Phase phase_from_string(const std::string& s);

struct MoveIntent {
  Vec3 destination = Vec3::Zero();
  Phase phase = Phase::Terminal;
  std::string note;
};

/// Everything all robots agree on about one snapshot. Coordinates are those of
/// the snapshot, i.e. the observing robot's frame.
struct Situation {
  Configuration cfg;
  Phase phase = Phase::Terminal;
  std::string reason;  // for Unsolvable

  Ball enclosing;
  double inner_radius = 0.0;
  std::optional<std::size_t> center_robot;

  PointGroup theta;
  PointGroup gamma;
  OrbitDecomposition dec;

  std::optional<std::size_t> polyhedral_orbit;  // PrepType1 / GoToCenter
  std::optional<Solid> solid;
  std::optional<std::size_t> mirror_orbit;      // PrepType2 / RemoveMirror
  std::optional<std::size_t> shrink_orbit;      // PrepType2
  std::optional<Plane> target;                  // TwistPrism / FinalLanding
};

/// Analyse a snapshot and choose the phase. Never throws for unsolvable inputs;
/// see dispatch() for the strict variant.
[[nodiscard]] Situation analyse(const Configuration& snapshot);

/// Phase of the snapshot; throws "unsolvable structure" where analyse() would
/// report Phase::Unsolvable and "multiplicity" for coincident points.
[[nodiscard]] Phase dispatch(const Configuration& snapshot);

// Per-phase destinations for robot `self`, in the snapshot's coordinates.
[[nodiscard]] Vec3 prep_center(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 prep_type1(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 prep_type2(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 go_to_center(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 phase1_remove_mirror(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 phase2_twist(const Situation& s, std::size_t self);
[[nodiscard]] Vec3 unsolvable_move(const Situation& s, std::size_t self);

/// Go-to-center face candidates of the polyhedral orbit for one robot.
[[nodiscard]] std::vector<Vec3> go_to_center_candidates(const Situation& s, std::size_t self);

/// Side edge s and base circumradius of the thin regular k-gon prism
/// inscribed in a sphere of radius r whose base edge is s/10.
struct PrismShape {
  double side = 0.0;
  double base_radius = 0.0;
};
[[nodiscard]] PrismShape fictitious_prism(int k, double r);

[[nodiscard]] Plane phase4_target_plane(const Situation& s);

/// Landing candidates for every robot. A robot with several candidates takes
/// the lexicographically smallest one in its own frame; every other robot
/// treats all of them as occupied.
[[nodiscard]] std::vector<std::vector<Vec3>> phase5_destinations(const Situation& s);

/// The common algorithm: snapshot in the robot's own frame, own position at
/// the origin. Input order does not matter.
[[nodiscard]] MoveIntent step(const std::vector<Vec3>& snapshot, double tol = kDefaultTolerance);

}  // namespace planeform
