#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planeform/algorithm.hpp"
#include "planeform/geometry.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {

/// Local coordinate system of one robot: local = orientation^T (x - origin) / scale.
/// Orientation may be improper; orientation and scale never change.
struct LocalFrame {
  Vec3 origin = Vec3::Zero();
  Mat3 orientation = Mat3::Identity();
  double scale = 1.0;

  [[nodiscard]] Vec3 to_local(const Vec3& x) const { return orientation.transpose() * (x - origin) / scale; }
  [[nodiscard]] Vec3 to_global(const Vec3& x) const { return origin + scale * (orientation * x); }
};

using FrameAssignment = std::vector<LocalFrame>;

[[nodiscard]] FrameAssignment random_frames(const Configuration& cfg, std::uint64_t seed);

/// Frames under which the subgroup `h` (acting about `center`) maps every robot
/// together with its frame onto another robot and its frame.
[[nodiscard]] FrameAssignment symmetric_frames(const Configuration& cfg, const std::vector<Mat3>& h,
                                               const Vec3& center, std::uint64_t seed);

/// True when every element of `h` maps (position, frame) pairs onto each other.
[[nodiscard]] bool acts_on_frames(const Configuration& cfg, const FrameAssignment& frames, const std::vector<Mat3>& h,
                                  const Vec3& center);

enum class Outcome { Terminated, StepLimit, SymmetryTrapped, Collision };

[[nodiscard]] std::string to_string(Outcome o);

struct TraceStep {
  std::size_t index = 0;
  std::vector<Vec3> positions;
  std::vector<Vec3> intents;  // global destinations; empty on the terminal step
  Phase phase = Phase::Terminal;
  std::string theta;
  std::string gamma;
  bool terminated = false;
};

struct ExecutionTrace {
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::StepLimit;
  std::string error;
};

struct RunOptions {
  std::size_t max_steps = 100;
  /// Subgroup whose persistence marks a symmetry-trapped run.
  std::optional<std::vector<Mat3>> monitor;
  bool record_groups = true;
  std::function<void(const TraceStep&)> on_step;
};

[[nodiscard]] ExecutionTrace run(const Configuration& initial, FrameAssignment frames, const RunOptions& options = {});

/// True iff every configuration of the trace is invariant under every element
/// of `h` about its own SEB centre.
[[nodiscard]] bool symmetry_monitor(const ExecutionTrace& trace, const std::vector<Mat3>& h,
                                    double tol = kDefaultTolerance);
[[nodiscard]] bool invariant_under(const Configuration& cfg, const std::vector<Mat3>& h);

/// Coplanar, multiplicity-free, and every robot's intent under `frames` is to stay.
[[nodiscard]] bool verify_terminal(const Configuration& cfg, const FrameAssignment& frames);
[[nodiscard]] bool verify_terminal(const Configuration& cfg);

}  // namespace planeform
