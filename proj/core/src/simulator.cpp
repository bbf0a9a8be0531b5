#include "planeform/simulator.hpp"

#include <random>

#include "planeform/polyhedra.hpp"
#include "planeform/symmetricity.hpp"

namespace planeform {

namespace {

LocalFrame draw_frame(std::mt19937_64& rng, const Vec3& origin) {
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  LocalFrame f;
  f.origin = origin;
  f.orientation = random_orthogonal(rng, true);
  f.scale = scale(rng);
  return f;
}

MoveIntent intent_of(const Configuration& cfg, const LocalFrame& frame) {
  std::vector<Vec3> local;
  local.reserve(cfg.size());
  for (const auto& p : cfg.points()) local.push_back(frame.to_local(p));
  return step(local, cfg.tol());
}

std::string label_or_unknown(const Configuration& cfg, bool rotations) {
  try {
    const PointGroup g = detect_symmetries(cfg);
    return (rotations ? rotation_group(g) : g).label.str();
  } catch (const Error&) {
    return "?";
  }
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Terminated: return "Terminated";
    case Outcome::StepLimit: return "StepLimit";
    case Outcome::SymmetryTrapped: return "SymmetryTrapped";
    case Outcome::Collision: return "Collision";
  }
  return "?";
}

FrameAssignment random_frames(const Configuration& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FrameAssignment out;
  for (const auto& p : cfg.points()) out.push_back(draw_frame(rng, p));
  return out;
}

FrameAssignment symmetric_frames(const Configuration& cfg, const std::vector<Mat3>& h, const Vec3& center,
                                 std::uint64_t seed) {
  if (!acts_freely(cfg, center, h)) throw Error("subgroup does not act freely");
  std::mt19937_64 rng(seed);
  FrameAssignment out(cfg.size());
  std::vector<bool> done(cfg.size(), false);
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (done[i]) continue;
    const LocalFrame seed_frame = draw_frame(rng, cfg[i]);
    for (const auto& m : h) {
      const auto j = cfg.find(center + m * (cfg[i] - center));
      if (!j) throw Error("subgroup does not act on configuration");
      out[*j] = LocalFrame{cfg[*j], m * seed_frame.orientation, seed_frame.scale};
      done[*j] = true;
    }
  }
  return out;
}

bool acts_on_frames(const Configuration& cfg, const FrameAssignment& frames, const std::vector<Mat3>& h,
                    const Vec3& center) {
  for (const auto& m : h) {
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      const auto j = cfg.find(center + m * (cfg[i] - center));
      if (!j) return false;
      if (!same_matrix(frames[*j].orientation, m * frames[i].orientation)) return false;
      if (std::abs(frames[*j].scale - frames[i].scale) > 1e-12 * frames[i].scale) return false;
    }
  }
  return true;
}

bool invariant_under(const Configuration& cfg, const std::vector<Mat3>& h) {
  const Vec3 c = seb(cfg).center;
  for (const auto& m : h) {
    for (const auto& p : cfg.points()) {
      if (!cfg.find(c + m * (p - c))) return false;
    }
  }
  return true;
}

ExecutionTrace run(const Configuration& initial, FrameAssignment frames, const RunOptions& options) {
  if (frames.size() != initial.size()) throw Error("frame count does not match robot count");
  if (!initial.distinct()) throw Error("multiplicity");
  ExecutionTrace trace;
  std::vector<Vec3> pos = initial.points();
  bool monitor_held = true;
  for (std::size_t t = 0;; ++t) {
    const Configuration cfg(pos, initial.tol());
    TraceStep rec;
    rec.index = t;
    rec.positions = pos;
    if (options.record_groups) {
      rec.theta = label_or_unknown(cfg, false);
      rec.gamma = label_or_unknown(cfg, true);
    }
    if (options.monitor) monitor_held = monitor_held && invariant_under(cfg, *options.monitor);

    std::vector<Vec3> next(pos.size());
    bool all_terminal = true;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      frames[i].origin = pos[i];
      const MoveIntent in = intent_of(cfg, frames[i]);
      if (i == 0) rec.phase = in.phase;
      all_terminal = all_terminal && in.phase == Phase::Terminal;
      next[i] = frames[i].to_global(in.destination);
    }
    if (all_terminal) {
      rec.terminated = true;
      trace.steps.push_back(rec);
      if (options.on_step) options.on_step(trace.steps.back());
      trace.outcome = Outcome::Terminated;
      return trace;
    }
    rec.intents = next;
    trace.steps.push_back(rec);
    if (options.on_step) options.on_step(trace.steps.back());
    if (t >= options.max_steps) {
      trace.outcome = options.monitor && monitor_held ? Outcome::SymmetryTrapped : Outcome::StepLimit;
      return trace;
    }
    if (!Configuration(next, initial.tol()).distinct()) {
      trace.outcome = Outcome::Collision;
      trace.error = "collision at step " + std::to_string(t + 1);
      return trace;
    }
    pos = std::move(next);
  }
}

bool symmetry_monitor(const ExecutionTrace& trace, const std::vector<Mat3>& h, double tol) {
  for (const auto& s : trace.steps) {
    if (!invariant_under(Configuration(s.positions, tol), h)) return false;
  }
  return true;
}

bool verify_terminal(const Configuration& cfg, const FrameAssignment& frames) {
  if (!cfg.distinct() || !coplanar(cfg)) return false;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    LocalFrame f = frames[i];
    f.origin = cfg[i];
    const MoveIntent in = intent_of(cfg, f);
    if (in.phase != Phase::Terminal || in.destination.norm() > cfg.length_tol() / f.scale) return false;
  }
  return true;
}

bool verify_terminal(const Configuration& cfg) {
  FrameAssignment frames;
  for (const auto& p : cfg.points()) frames.push_back(LocalFrame{p, Mat3::Identity(), 1.0});
  return verify_terminal(cfg, frames);
}

}  // namespace planeform
