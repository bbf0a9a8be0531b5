#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "planeform/algorithm.hpp"
#include "planeform/oracle.hpp"
#include "planeform/orbits.hpp"
#include "planeform/scenario.hpp"
#include "planeform/simulator.hpp"
#include "planeform/symmetricity.hpp"

using namespace planeform;
using nlohmann::json;

namespace {

constexpr int kExitStepLimit = 2;
constexpr int kExitTrapped = 3;
constexpr int kExitCollision = 4;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const Vec3& v) { return "(" + fmt(v.x()) + ", " + fmt(v.y()) + ", " + fmt(v.z()) + ")"; }

std::string join(const std::vector<Label>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l.str();
  return out.empty() ? "-" : out;
}

Scenario load(const std::string& path, std::optional<double> tol) {
  Scenario s = load_scenario(path);
  if (tol) s.tol = *tol;
  return s;
}

int cmd_gen(const std::string& shape, std::uint64_t seed, std::optional<double> tol, const std::string& out) {
  Scenario s;
  s.points = generate(shape, seed);
  s.generator = shape;
  s.seed = seed;
  if (tol) s.tol = *tol;
  const std::string text = to_json(s) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << text;
  }
  return 0;
}

int cmd_analyze(const std::string& path, std::optional<double> tol, bool as_json) {
  const Scenario sc = load(path, tol);
  const Configuration cfg(sc.points, sc.tol);
  const PointGroup theta = detect_symmetries(cfg);
  const PointGroup gamma = rotation_group(theta);
  const Ball outer = seb(cfg);
  const Ball inner = innermost_empty_ball(cfg, outer);
  const Symmetricity rho = symmetricity(cfg, theta);
  const Solvability sol = is_solvable(rho);
  const Situation sit = analyse(cfg);

  std::optional<OrbitDecomposition> dec;
  if (!cfg.find(outer.center)) dec = ordered_decomposition(cfg, theta);

  if (as_json) {
    json j;
    j["n"] = cfg.size();
    j["center"] = {outer.center.x(), outer.center.y(), outer.center.z()};
    j["enclosing_radius"] = outer.radius;
    j["inner_radius"] = inner.radius;
    j["theta"] = theta.label.str();
    j["gamma"] = gamma.label.str();
    j["order"] = theta.order();
    if (dec) {
      json orbits = json::array();
      for (std::size_t o = 0; o < dec->orbits.size(); ++o) {
        orbits.push_back({{"size", dec->orbits[o].size()}, {"radius", dec->radii[o]}, {"members", dec->orbits[o]}});
      }
      j["orbits"] = orbits;
    }
    json all = json::array();
    for (const auto& l : rho.all) all.push_back(l.str());
    json maximal = json::array();
    for (const auto& l : rho.maximal) maximal.push_back(l.str());
    j["symmetricity"] = all;
    j["maximal"] = maximal;
    j["solvable"] = sol.solvable;
    if (sol.certificate) j["certificate"] = sol.certificate->str();
    j["phase"] = to_string(sit.phase);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "n: " << cfg.size() << "\n"
            << "center: " << fmt(outer.center) << "\n"
            << "enclosing radius: " << fmt(outer.radius) << "\n"
            << "inner radius: " << fmt(inner.radius) << "\n"
            << "theta: " << theta.label.str() << " (order " << theta.order() << ")\n"
            << "gamma: " << gamma.label.str() << "\n";
  if (dec) {
    std::cout << "orbits:";
    for (std::size_t o = 0; o < dec->orbits.size(); ++o) {
      std::cout << (o ? ", " : " ") << dec->orbits[o].size() << "@" << fmt(dec->radii[o]);
    }
    std::cout << "\n";
  } else {
    std::cout << "orbits: center occupied\n";
  }
  std::cout << "symmetricity: " << join(rho.all) << "\n"
            << "maximal: " << join(rho.maximal) << "\n"
            << "solvable: " << (sol.solvable ? "yes" : "no");
  if (sol.certificate) std::cout << " (certificate " << sol.certificate->str() << ")";
  std::cout << "\nphase: " << to_string(sit.phase) << "\n";
  return 0;
}

int cmd_run(const std::string& path, std::optional<double> tol, std::optional<std::string> frames_flag,
            std::optional<std::size_t> max_steps, std::uint64_t seed, const std::string& out) {
  const Scenario sc = load(path, tol);
  const Configuration cfg(sc.points, sc.tol);
  FrameSpec spec = RandomFrames{seed};
  if (frames_flag) spec = parse_frame_flag(*frames_flag);
  else if (sc.frames) spec = *sc.frames;
  const ResolvedFrames rf = resolve_frames(spec, cfg);

  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw Error("cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;

  TraceHeader header;
  header.n = cfg.size();
  header.tol = sc.tol;
  header.frames = describe_frames(spec);
  header.assignment = rf.frames;
  os << trace_header_line(header) << "\n";

  RunOptions opts;
  opts.max_steps = max_steps.value_or(sc.max_steps.value_or(100));
  opts.monitor = rf.monitor;
  opts.on_step = [&](const TraceStep& s) { os << trace_record_line(s) << "\n" << std::flush; };
  const ExecutionTrace trace = run(cfg, rf.frames, opts);
  os << trace_footer_line(trace) << "\n";

  std::cerr << to_string(trace.outcome) << " after " << trace.steps.size() - 1 << " step(s)";
  if (!trace.error.empty()) std::cerr << ": " << trace.error;
  std::cerr << "\n";
  switch (trace.outcome) {
    case Outcome::Terminated: return 0;
    case Outcome::StepLimit: return kExitStepLimit;
    case Outcome::SymmetryTrapped: return kExitTrapped;
    case Outcome::Collision: return kExitCollision;
  }
  return 1;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const ParsedTrace trace = parse_trace(in);
  const VerifyReport r = verify_trace(trace);
  if (r.ok) {
    std::cout << "pass: " << trace.steps.size() << " record(s)";
    if (trace.outcome) std::cout << ", outcome " << *trace.outcome;
    std::cout << "\n";
    return 0;
  }
  std::cout << "fail\n";
  for (const auto& p : r.problems) std::cout << "  " << p << "\n";
  return 1;
}

int cmd_oracle_compare(const std::string& path, std::optional<double> tol) {
  const Scenario sc = load(path, tol);
  const oracle::Comparison c = oracle::compare(sc.points, sc.tol);
  std::cout << "group order: " << c.library_order << " (library) vs " << c.oracle_order << " (oracle)\n";
  if (c.subgroups_checked) {
    std::cout << "free subgroups: " << c.library_free << " vs " << c.oracle_free << "\n";
  }
  if (!c.detail.empty()) std::cout << c.detail << "\n";
  std::cout << (c.pass() ? "pass" : "fail") << "\n";
  return c.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane formation by synchronous robots without chirality"};
  app.require_subcommand(1);

  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::string out;
  bool as_json = false;
  std::optional<std::string> frames;
  std::optional<std::size_t> max_steps;
  std::string shape, file;

  auto* gen = app.add_subcommand("gen", "Write a scenario for a named shape");
  gen->add_option("shape", shape, "e.g. cube, prism(6,0.5), random-symmetric(C3,2)")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--tol", tol);
  gen->add_option("--out", out);

  auto* analyze = app.add_subcommand("analyze", "Report symmetry, decomposition and solvability");
  analyze->add_option("file", file)->required();
  analyze->add_option("--tol", tol);
  analyze->add_flag("--json", as_json);

  auto* runc = app.add_subcommand("run", "Execute the algorithm and write a trace");
  runc->add_option("file", file)->required();
  runc->add_option("--frames", frames, "random:<seed>|symmetric:<label>:<seed>|file:<path>");
  runc->add_option("--max-steps", max_steps);
  runc->add_option("--seed", seed, "seed for random frames when --frames is absent");
  runc->add_option("--tol", tol);
  runc->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Re-check a trace file");
  verify->add_option("file", file)->required();

  auto* oracle = app.add_subcommand("oracle-compare", "Compare detection against brute-force oracles");
  oracle->add_option("file", file)->required();
  oracle->add_option("--tol", tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(shape, seed, tol, out);
    if (analyze->parsed()) return cmd_analyze(file, tol, as_json);
    if (runc->parsed()) return cmd_run(file, tol, frames, max_steps, seed, out);
    if (verify->parsed()) return cmd_verify(file);
    if (oracle->parsed()) return cmd_oracle_compare(file, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
