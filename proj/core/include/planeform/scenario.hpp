#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/simulator.hpp"

namespace planeform {

struct RandomFrames {
  std::uint64_t seed = 0;
};
struct SymmetricFrames {
  std::string label;
  std::uint64_t seed = 0;
};
struct ExplicitFrames {
  std::vector<Mat3> orientations;
  std::vector<double> scales;
};
using FrameSpec = std::variant<RandomFrames, SymmetricFrames, ExplicitFrames>;

struct Scenario {
  std::vector<Vec3> points;
  double tol = kDefaultTolerance;
  std::optional<FrameSpec> frames;
  std::optional<std::size_t> max_steps;
  std::string generator;  // informational
  std::optional<std::uint64_t> seed;
};

[[nodiscard]] std::string to_json(const Scenario& s);
[[nodiscard]] Scenario parse_scenario(const std::string& text);
[[nodiscard]] Scenario load_scenario(const std::string& path);

/// Parses "random:<seed>", "symmetric:<label>:<seed>" or "file:<path>".
[[nodiscard]] FrameSpec parse_frame_flag(const std::string& flag);
[[nodiscard]] std::string describe_frames(const FrameSpec& f);

struct ResolvedFrames {
  FrameAssignment frames;
  std::optional<std::vector<Mat3>> monitor;  // the witness subgroup for symmetric frames
};

/// Symmetric frames require the label to be in the symmetricity; the error
/// lists the valid labels otherwise.
[[nodiscard]] ResolvedFrames resolve_frames(const FrameSpec& spec, const Configuration& cfg);

/// Shapes: tetrahedron, octahedron, cube, dodecahedron, icosahedron,
/// icosidodecahedron, prism(k,h), antiprism(k,h), pyramid(k[,h]), random(n),
/// random-symmetric(label,orbits).
[[nodiscard]] std::vector<Vec3> generate(const std::string& shape, std::uint64_t seed);

struct TraceHeader {
  std::size_t n = 0;
  double tol = kDefaultTolerance;
  std::string frames;  // the flag form
  std::vector<LocalFrame> assignment;
};

[[nodiscard]] std::string trace_header_line(const TraceHeader& h);
[[nodiscard]] std::string trace_record_line(const TraceStep& step);
[[nodiscard]] std::string trace_footer_line(const ExecutionTrace& trace);

struct ParsedTrace {
  TraceHeader header;
  std::vector<TraceStep> steps;
  std::optional<std::string> outcome;
};

[[nodiscard]] ParsedTrace parse_trace(std::istream& in);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks positions per record, absence of multiplicities, that each step's
/// positions equal the previous record's intents, and the terminal conditions.
[[nodiscard]] VerifyReport verify_trace(const ParsedTrace& trace);

}  // namespace planeform
