#include "planeform/scenario.hpp"

#include <fstream>
#include <istream>
#include <random>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "planeform/polyhedra.hpp"
#include "planeform/symmetricity.hpp"

namespace planeform {

using nlohmann::json;

namespace {

json vec(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 vec(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error("expected [x, y, z]");
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json points_json(const std::vector<Vec3>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(vec(p));
  return a;
}

std::vector<Vec3> points_from(const json& j) {
  std::vector<Vec3> out;
  for (const auto& p : j) out.push_back(vec(p));
  return out;
}

json mat(const Mat3& m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r) a.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
  return a;
}

Mat3 mat(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error("expected a 3x3 matrix");
  Mat3 m;
  for (int r = 0; r < 3; ++r) m.row(r) = vec(j.at(r)).transpose();
  return m;
}

json frames_json(const FrameSpec& f) {
  if (const auto* r = std::get_if<RandomFrames>(&f)) return {{"kind", "random"}, {"seed", r->seed}};
  if (const auto* s = std::get_if<SymmetricFrames>(&f)) {
    return {{"kind", "symmetric"}, {"label", s->label}, {"seed", s->seed}};
  }
  const auto& e = std::get<ExplicitFrames>(f);
  json list = json::array();
  for (std::size_t i = 0; i < e.orientations.size(); ++i) {
    list.push_back({{"orientation", mat(e.orientations[i])}, {"scale", e.scales[i]}});
  }
  return {{"kind", "explicit"}, {"frames", list}};
}

ExplicitFrames explicit_from(const json& list) {
  ExplicitFrames e;
  for (const auto& f : list) {
    e.orientations.push_back(mat(f.at("orientation")));
    e.scales.push_back(f.value("scale", 1.0));
  }
  return e;
}

FrameSpec frames_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "random") return RandomFrames{j.at("seed").get<std::uint64_t>()};
  if (kind == "symmetric") return SymmetricFrames{j.at("label").get<std::string>(), j.at("seed").get<std::uint64_t>()};
  if (kind == "explicit") return explicit_from(j.at("frames"));
  throw Error("unknown frames kind '" + kind + "'");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("parse error: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw Error("invalid integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw Error("invalid number '" + s + "'");
  return v;
}

std::string frame_flag_impl(const FrameSpec& f) {
  if (const auto* r = std::get_if<RandomFrames>(&f)) return "random:" + std::to_string(r->seed);
  if (const auto* s = std::get_if<SymmetricFrames>(&f)) return "symmetric:" + s->label + ":" + std::to_string(s->seed);
  return "explicit";
}

}  // namespace

std::string to_json(const Scenario& s) {
  json j;
  j["points"] = points_json(s.points);
  j["tol"] = s.tol;
  if (s.frames) j["frames"] = frames_json(*s.frames);
  if (s.max_steps) j["max_steps"] = *s.max_steps;
  if (!s.generator.empty()) j["generator"] = s.generator;
  if (s.seed) j["seed"] = *s.seed;
  return j.dump(2);
}

Scenario parse_scenario(const std::string& text) {
  const json j = parse_json(text);
  try {
    Scenario s;
    s.points = points_from(j.at("points"));
    s.tol = j.value("tol", kDefaultTolerance);
    if (j.contains("frames")) s.frames = frames_from(j.at("frames"));
    if (j.contains("max_steps")) s.max_steps = j.at("max_steps").get<std::size_t>();
    s.generator = j.value("generator", "");
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (s.frames) {
      if (const auto* e = std::get_if<ExplicitFrames>(&*s.frames); e && e->orientations.size() != s.points.size()) {
        throw Error("explicit frame count does not match point count");
      }
    }
    (void)Configuration(s.points, s.tol);
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("invalid scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

FrameSpec parse_frame_flag(const std::string& flag) {
  static const std::regex random_re(R"(random:(\d+))");
  static const std::regex symmetric_re(R"(symmetric:([A-Za-z0-9]+):(\d+))");
  std::smatch m;
  if (std::regex_match(flag, m, random_re)) return RandomFrames{std::stoull(m[1])};
  if (std::regex_match(flag, m, symmetric_re)) return SymmetricFrames{m[1], std::stoull(m[2])};
  if (flag.rfind("file:", 0) == 0) {
    const json j = parse_json(read_file(flag.substr(5)));
    try {
      if (j.is_array()) return explicit_from(j);
      if (j.contains("frames")) {
        const auto& f = j.at("frames");
        return f.is_array() ? FrameSpec{explicit_from(f)} : frames_from(f);
      }
    } catch (const json::exception& e) {
      throw Error(std::string("invalid frames file: ") + e.what());
    }
    throw Error("frames file has no frames");
  }
  throw Error("invalid --frames value '" + flag + "'");
}

ResolvedFrames resolve_frames(const FrameSpec& spec, const Configuration& cfg) {
  if (const auto* r = std::get_if<RandomFrames>(&spec)) return {random_frames(cfg, r->seed), std::nullopt};
  if (const auto* e = std::get_if<ExplicitFrames>(&spec)) {
    if (e->orientations.size() != cfg.size()) throw Error("explicit frame count does not match point count");
    ResolvedFrames out;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      if (!is_orthogonal(e->orientations[i])) throw Error("frame orientation is not orthogonal");
      if (!(e->scales[i] > 0)) throw Error("frame scale must be positive");
      out.frames.push_back(LocalFrame{cfg[i], e->orientations[i], e->scales[i]});
    }
    return out;
  }
  const auto& s = std::get<SymmetricFrames>(spec);
  const Label want = Label::parse(s.label);
  const Symmetricity rho = symmetricity(cfg);
  const auto it = rho.witnesses.find(want);
  if (it == rho.witnesses.end()) {
    std::string valid;
    for (const auto& l : rho.all) valid += (valid.empty() ? "" : ", ") + l.str();
    throw Error(want.str() + " is not in the symmetricity; valid witnesses: " + valid);
  }
  return {symmetric_frames(cfg, it->second, rho.theta.center, s.seed), it->second};
}

std::vector<Vec3> generate(const std::string& shape, std::uint64_t seed) {
  static const std::regex re(R"(\s*([a-z-]+)\s*(?:\((.*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(shape, m, re)) throw Error("unknown shape '" + shape + "'");
  const std::string name = m[1];
  const std::vector<std::string> args = m[2].matched ? split_args(m[2]) : std::vector<std::string>{};
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) throw Error("wrong number of parameters for " + name);
  };
  std::mt19937_64 rng(seed);
  try {
    static const std::pair<const char*, Solid> solids[] = {
        {"tetrahedron", Solid::Tetrahedron},   {"octahedron", Solid::Octahedron},
        {"cube", Solid::Cube},                 {"dodecahedron", Solid::Dodecahedron},
        {"icosahedron", Solid::Icosahedron},   {"icosidodecahedron", Solid::Icosidodecahedron}};
    for (const auto& [n, s] : solids) {
      if (name == n) {
        need(0, 0);
        return solid(s);
      }
    }
    if (name == "prism" || name == "antiprism") {
      need(1, 2);
      const int k = to_int(args[0]);
      const double h = args.size() > 1 ? to_double(args[1]) : 1.0;
      return name == "prism" ? prism(k, h) : antiprism(k, h);
    }
    if (name == "pyramid") {
      need(1, 2);
      return pyramid(to_int(args[0]), args.size() > 1 ? to_double(args[1]) : 1.0);
    }
    if (name == "random") {
      need(1, 1);
      const int n = to_int(args[0]);
      if (n < 1) throw Error("random(n) needs n >= 1");
      return random_points(n, rng);
    }
    if (name == "random-symmetric") {
      need(2, 2);
      const int orbits = to_int(args[1]);
      if (orbits < 1) throw Error("random-symmetric needs at least one orbit");
      return random_symmetric(Label::parse(args[0]), orbits, rng);
    }
  } catch (const std::invalid_argument&) {
    throw Error("invalid parameters for " + name);
  } catch (const std::out_of_range&) {
    throw Error("invalid parameters for " + name);
  }
  throw Error("unknown shape '" + name + "'");
}

std::string trace_header_line(const TraceHeader& h) {
  json frames = json::array();
  for (const auto& f : h.assignment) frames.push_back({{"orientation", mat(f.orientation)}, {"scale", f.scale}});
  return json{{"type", "header"}, {"n", h.n}, {"tol", h.tol}, {"frames", h.frames}, {"assignment", frames}}.dump();
}

std::string trace_record_line(const TraceStep& s) {
  json j{{"type", "step"},         {"step", s.index},   {"phase", to_string(s.phase)},
         {"positions", points_json(s.positions)},   {"theta", s.theta},
         {"gamma", s.gamma},       {"terminated", s.terminated}};
  if (!s.intents.empty()) j["intents"] = points_json(s.intents);
  return j.dump();
}

std::string trace_footer_line(const ExecutionTrace& t) {
  json j{{"type", "outcome"}, {"outcome", to_string(t.outcome)}, {"steps", t.steps.size()}};
  if (!t.error.empty()) j["error"] = t.error;
  return j.dump();
}

ParsedTrace parse_trace(std::istream& in) {
  ParsedTrace out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      const auto type = j.at("type").get<std::string>();
      if (type == "header") {
        out.header.n = j.at("n").get<std::size_t>();
        out.header.tol = j.value("tol", kDefaultTolerance);
        out.header.frames = j.value("frames", "");
        for (const auto& f : j.value("assignment", json::array())) {
          out.header.assignment.push_back(LocalFrame{Vec3::Zero(), mat(f.at("orientation")), f.at("scale").get<double>()});
        }
        have_header = true;
      } else if (type == "step") {
        TraceStep s;
        s.index = j.at("step").get<std::size_t>();
        s.phase = phase_from_string(j.at("phase").get<std::string>());
        s.positions = points_from(j.at("positions"));
        if (j.contains("intents")) s.intents = points_from(j.at("intents"));
        s.theta = j.value("theta", "");
        s.gamma = j.value("gamma", "");
        s.terminated = j.at("terminated").get<bool>();
        out.steps.push_back(std::move(s));
      } else if (type == "outcome") {
        out.outcome = j.at("outcome").get<std::string>();
      } else {
        throw Error("unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      throw Error("malformed trace at line " + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("malformed trace at line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw Error("malformed trace: missing header");
  return out;
}

VerifyReport verify_trace(const ParsedTrace& trace) {
  VerifyReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  const double tol = trace.header.tol;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const std::string at = "step " + std::to_string(s.index) + ": ";
    if (s.index != i) fail(at + "non-consecutive step index");
    if (s.positions.size() != trace.header.n) {
      fail(at + "expected " + std::to_string(trace.header.n) + " positions");
      continue;
    }
    const Configuration cfg(s.positions, tol);
    if (!cfg.distinct()) fail(at + "multiplicity");
    if (i > 0) {
      const auto& prev = trace.steps[i - 1].intents;
      if (prev.size() != s.positions.size()) {
        fail(at + "previous record has no intents");
      } else {
        for (std::size_t k = 0; k < prev.size(); ++k) {
          if ((prev[k] - s.positions[k]).norm() > cfg.length_tol()) {
            fail(at + "robot " + std::to_string(k) + " is not where it intended to go");
            break;
          }
        }
      }
    }
    if (s.terminated) {
      if (i + 1 != trace.steps.size()) fail(at + "records after termination");
      if (!coplanar(cfg)) fail(at + "terminal configuration is not coplanar");
      if (trace.header.assignment.size() == cfg.size()) {
        if (!verify_terminal(cfg, trace.header.assignment)) fail(at + "terminal configuration is not stable");
      } else if (!verify_terminal(cfg)) {
        fail(at + "terminal configuration is not stable");
      }
    }
  }
  if (trace.outcome && *trace.outcome == "Terminated" && (trace.steps.empty() || !trace.steps.back().terminated)) {
    fail("outcome Terminated without a terminal record");
  }
  return r;
}

std::string describe_frames(const FrameSpec& f) { return frame_flag_impl(f); }

}  // namespace planeform
