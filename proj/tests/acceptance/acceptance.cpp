// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "planeform/algorithm.hpp"
#include "planeform/oracle.hpp"
#include "planeform/orbits.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/simulator.hpp"
#include "planeform/symmetricity.hpp"
#include "planeform/symmetry.hpp"

using namespace planeform;

namespace {

constexpr double kPlanarity = 1e-9;       // relative to the diameter
constexpr double kEquivariance = 1e-7;    // relative to the diameter
constexpr std::size_t kMaxCycles = 10;

struct Result {
  bool ok = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& why) {
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + why;
    ok = false;
  }
};

int report(int id, const char* name, double limit_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) r.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  const std::string count = r.failures > 0 ? "  [" + std::to_string(r.failures) + " violation(s)]" : "";
  std::printf("criterion %d %-28s %s  (%.2f s)%s%s%s\n", id, name, r.ok ? "PASS" : "FAIL", secs, count.c_str(),
              r.detail.empty() ? "" : "  ", r.detail.c_str());
  std::fflush(stdout);
  return r.ok ? 0 : 1;
}

std::set<std::string> names(const std::vector<Label>& labels) {
  std::set<std::string> out;
  for (const auto& l : labels) out.insert(l.str());
  return out;
}

std::vector<Vec3> transformed(const std::vector<Vec3>& pts, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0), s(0.2, 5.0);
  const Mat3 r = random_orthogonal(rng, true);
  const Vec3 t(u(rng), u(rng), u(rng));
  const double scale = s(rng);
  std::vector<Vec3> out;
  for (const auto& p : pts) out.push_back(t + scale * (r * p));
  return out;
}

double planarity_error(const std::vector<Vec3>& pts) {
  Vec3 mean = Vec3::Zero();
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  Mat3 cov = Mat3::Zero();
  for (const auto& p : pts) cov += (p - mean) * (p - mean).transpose();
  const Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  const Vec3 normal = es.eigenvectors().col(0);
  double err = 0.0;
  for (const auto& p : pts) err = std::max(err, std::abs((p - mean).dot(normal)));
  return err;
}

double diameter(const std::vector<Vec3>& pts) {
  double d = 0.0;
  for (const auto& p : pts) {
    for (const auto& q : pts) d = std::max(d, (p - q).norm());
  }
  return d;
}

double min_separation(const std::vector<Vec3>& pts) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::min(d, (pts[i] - pts[j]).norm());
  }
  return d;
}

// Random free-orbit configuration with at least five points.
std::vector<Vec3> symmetric_instance(const Label& label, int orbits, std::mt19937_64& rng) {
  orbits = std::max(orbits, (5 + label.order() - 1) / label.order());
  return random_symmetric(label, orbits, rng);
}

// 1 ------------------------------------------------------------------------
Result solid_symmetricity() {
  struct Row {
    Solid solid;
    const char* gamma;
    const char* theta;
    std::set<std::string> maximal;
  };
  const std::vector<Row> rows = {
      {Solid::Tetrahedron, "T", "Td", {"D2", "S4"}},
      {Solid::Octahedron, "O", "Oh", {"D3", "S6"}},
      {Solid::Cube, "O", "Oh", {"D4", "D2h", "D2v", "C4h", "S4"}},
      {Solid::Dodecahedron, "I", "Ih", {"D5", "D2", "S10"}},
      {Solid::Icosahedron, "I", "Ih", {"T", "D3", "S6"}},
  };
  Result r;
  for (const auto& row : rows) {
    const Configuration cfg(solid(row.solid));
    const PointGroup theta = detect_symmetries(cfg);
    const PointGroup gamma = rotation_group(theta);
    const auto maximal = names(symmetricity(cfg, theta).maximal);
    if (theta.label.str() != row.theta || gamma.label.str() != row.gamma || maximal != row.maximal) {
      r.fail(to_string(row.solid) + " gave " + gamma.label.str() + "/" + theta.label.str());
    }
  }
  return r;
}

// 2 ------------------------------------------------------------------------
Result go_to_center_outcomes() {
  const std::vector<std::pair<Solid, std::set<std::string>>> rows = {
      {Solid::Tetrahedron, {"D2", "C2", "C1"}},
      {Solid::Octahedron, {"D3", "C3", "C1"}},
      {Solid::Dodecahedron, {"D5", "D2", "C5", "C2", "C1"}},
      {Solid::Icosidodecahedron, {"C5", "C3", "C1"}},
  };
  Result r;
  std::mt19937_64 rng(2024);
  for (const auto& [s, allowed] : rows) {
    for (int run = 0; run < 500; ++run) {
      const Configuration cfg(transformed(solid(s), rng));
      RunOptions opts;
      opts.max_steps = 0;
      opts.record_groups = false;
      const ExecutionTrace trace = planeform::run(cfg, random_frames(cfg, rng()), opts);
      if (trace.steps.front().phase != Phase::GoToCenter) {
        r.fail(to_string(s) + " did not start with go-to-center");
        continue;
      }
      const PointGroup theta = detect_symmetries(Configuration(trace.steps.front().intents));
      const std::string gamma = rotation_group(theta).label.str();
      if (!allowed.count(gamma)) r.fail(to_string(s) + " run " + std::to_string(run) + " reached " + gamma);
      if (gamma != "C1" && gamma != "C2" && has_horizontal_mirror(theta)) {
        r.fail(to_string(s) + " run " + std::to_string(run) + " kept a horizontal mirror (" + theta.label.str() + ")");
      }
    }
  }
  return r;
}

// 3 ------------------------------------------------------------------------
Result group_metadata() {
  Result r;
  auto check = [&](const Label& label, GroupMetadata want) {
    const PointGroup g = make_group(canonical_group(label), Vec3::Zero());
    if (g.label != label) {
      r.fail(label.str() + " classified as " + g.label.str());
      return;
    }
    GroupMetadata got = metadata(g);
    if (!label.polyhedral() && label.family != Family::C1 && label.family != Family::Ci && label.family != Family::Cs) {
      got.axes2 = got.axes3 = got.axes4 = got.axes5 = got.mirrors = 0;  // not columns of the 2D table
      want.axes2 = want.axes3 = want.axes4 = want.axes5 = want.mirrors = 0;
    }
    if (label.polyhedral()) {
      got.principal_fold = got.other_twofold = 0;
      got.horizontal = false;
    }
    if (!(got == want)) r.fail(label.str() + " metadata differs");
  };
  auto two_d = [](int order, int principal, int others, bool horizontal) {
    GroupMetadata m;
    m.order = order;
    m.principal_fold = principal;
    m.other_twofold = others;
    m.horizontal = horizontal;
    return m;
  };
  for (int k = 2; k <= 12; ++k) {
    check(C(k), two_d(k, k, 0, false));
    check(Ch(k), two_d(2 * k, k, 0, true));
    check(Cv(k), two_d(2 * k, k, 0, false));
  }
  for (int l = 2; l <= 12; ++l) {
    check(D(l), two_d(2 * l, l, l, false));
    check(Dh(l), two_d(4 * l, l, l, true));
    check(Dv(l), two_d(4 * l, l, l, false));
  }
  for (int m = 4; m <= 24; m += 2) check(S(m), two_d(m, m, 0, true));

  auto three_d = [](int a2, int a3, int a4, int a5, int mirrors, int order) {
    GroupMetadata m;
    m.axes2 = a2, m.axes3 = a3, m.axes4 = a4, m.axes5 = a5, m.mirrors = mirrors, m.order = order;
    return m;
  };
  check(simple(Family::T), three_d(3, 4, 0, 0, 0, 12));
  check(simple(Family::Td), three_d(3, 4, 0, 0, 6, 24));
  check(simple(Family::Th), three_d(3, 4, 0, 0, 3, 24));
  check(simple(Family::O), three_d(6, 4, 3, 0, 0, 24));
  check(simple(Family::Oh), three_d(6, 4, 3, 0, 9, 48));
  check(simple(Family::I), three_d(15, 10, 0, 6, 0, 60));
  check(simple(Family::Ih), three_d(15, 10, 0, 6, 15, 120));

  for (const auto& [label, order] : {std::pair{C1(), 1}, std::pair{Ci(), 2}, std::pair{Cs(), 2}}) {
    const PointGroup g = make_group(canonical_group(label), Vec3::Zero());
    if (g.label != label || static_cast<int>(g.order()) != order || g.axes.size() != 0) {
      r.fail(label.str() + " axis-free row differs");
    }
  }
  return r;
}

// 4 ------------------------------------------------------------------------
std::vector<Vec3> with_equator(std::vector<Vec3> pts, int k, double radius, double phase) {
  for (int i = 0; i < k; ++i) {
    const double a = phase + 2 * std::numbers::pi * i / k;
    pts.emplace_back(radius * std::cos(a), radius * std::sin(a), 0.0);
  }
  return pts;
}

std::vector<std::vector<Vec3>> solvable_instances() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<Vec3>> out;
  const Solid solids[] = {Solid::Tetrahedron, Solid::Octahedron, Solid::Dodecahedron, Solid::Icosidodecahedron};
  for (int i = 0; i < 100; ++i) out.push_back(transformed(solid(solids[i % 4]), rng));
  for (int i = 0; i < 100; ++i) {
    const int k = 3 + static_cast<int>(u(rng) * 6);
    const double h = 0.3 + 1.2 * u(rng);
    const bool anti = i % 2 == 1;
    const double radius = 0.3 + 0.6 * u(rng);
    const double phases[] = {0.0, std::numbers::pi / k, u(rng) * 2 * std::numbers::pi / k};
    const double phase = phases[(i / 2) % 3];
    out.push_back(transformed(with_equator(anti ? antiprism(k, h) : prism(k, h), k, radius, phase), rng));
  }
  for (int i = 0; i < 300; ++i) {
    const int n = 4 + static_cast<int>(u(rng) * 61);
    std::vector<Vec3> pts;
    auto rnd = [&] { return Vec3(2 * u(rng) - 1, 2 * u(rng) - 1, 2 * u(rng) - 1); };
    switch (i % 3) {
      case 0: {  // Cs
        const int on_plane = std::min(n - 2, static_cast<int>(u(rng) * 7));
        for (int j = 0; j < on_plane; ++j) pts.emplace_back(2 * u(rng) - 1, 2 * u(rng) - 1, 0.0);
        while (static_cast<int>(pts.size()) + 2 <= n) {
          const Vec3 p = rnd();
          pts.push_back(p);
          pts.emplace_back(p.x(), p.y(), -p.z());
        }
        break;
      }
      case 1: {  // Ci, with a robot at the centre for odd n
        if (n % 2 == 1) pts.push_back(Vec3::Zero());
        while (static_cast<int>(pts.size()) + 2 <= n) {
          const Vec3 p = rnd();
          pts.push_back(p);
          pts.push_back(-p);
        }
        break;
      }
      default:
        for (int j = 0; j < n; ++j) pts.push_back(rnd());
    }
    out.push_back(transformed(pts, rng));
  }
  return out;
}

Result formation() {
  Result r;
  const auto instances = solvable_instances();
  std::uint64_t seed = 1;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::string at = "instance " + std::to_string(i);
    const Configuration cfg(instances[i]);
    if (!is_solvable(cfg).solvable) {
      r.fail(at + " is not solvable");
      continue;
    }
    const FrameAssignment frames = random_frames(cfg, seed++);
    RunOptions opts;
    opts.max_steps = kMaxCycles;
    opts.record_groups = false;
    const ExecutionTrace trace = planeform::run(cfg, frames, opts);
    if (trace.outcome != Outcome::Terminated) {
      r.fail(at + " ended " + to_string(trace.outcome) + (trace.error.empty() ? "" : " " + trace.error));
      continue;
    }
    const auto& last = trace.steps.back().positions;
    const double d = diameter(last);
    if (planarity_error(last) > kPlanarity * d) r.fail(at + " not coplanar");
    if (!(min_separation(last) > 0.0)) r.fail(at + " has a multiplicity");
    if (!verify_terminal(Configuration(last), frames)) r.fail(at + " is not a fixed point");
  }
  return r;
}

// 5 ------------------------------------------------------------------------
Result impossibility_witnesses() {
  Result r;
  std::vector<Vec3> cuboid;
  for (double x : {1.0, -1.0}) {
    for (double y : {0.7, -0.7}) {
      for (double z : {0.4, -0.4}) cuboid.emplace_back(x, y, z);
    }
  }
  const std::vector<std::tuple<std::string, std::vector<Vec3>, Label>> cases = {
      {"cube", solid(Solid::Cube), Ch(4)},
      {"icosahedron", solid(Solid::Icosahedron), simple(Family::T)},
      {"cuboid", cuboid, Dh(2)},
  };
  for (const auto& [name, pts, label] : cases) {
    const Configuration cfg(pts);
    const Symmetricity rho = symmetricity(cfg);
    const auto it = rho.witnesses.find(label);
    if (it == rho.witnesses.end()) {
      r.fail(name + " has no " + label.str() + " witness");
      continue;
    }
    const FrameAssignment frames = symmetric_frames(cfg, it->second, rho.theta.center, 7);
    RunOptions opts;
    opts.max_steps = 100;
    opts.monitor = it->second;
    opts.record_groups = false;
    const ExecutionTrace trace = planeform::run(cfg, frames, opts);
    const bool terminal = std::any_of(trace.steps.begin(), trace.steps.end(),
                                      [](const TraceStep& s) { return s.terminated || s.phase == Phase::Terminal; });
    if (trace.outcome != Outcome::SymmetryTrapped) r.fail(name + " ended " + to_string(trace.outcome));
    if (terminal) r.fail(name + " reached a terminal configuration");
    if (trace.steps.size() != 101) r.fail(name + " ran " + std::to_string(trace.steps.size() - 1) + " steps");
    if (!symmetry_monitor(trace, it->second)) r.fail(name + " lost its " + label.str() + " symmetry");
  }
  return r;
}

// 6 ------------------------------------------------------------------------
std::vector<Label> symmetric_labels() {
  std::vector<Label> out = {C1(), Ci(), Cs()};
  for (int k = 2; k <= 6; ++k) {
    out.push_back(C(k));
    out.push_back(Ch(k));
    out.push_back(Cv(k));
    out.push_back(D(k));
    out.push_back(Dh(k));
    out.push_back(Dv(k));
  }
  for (int m = 4; m <= 10; m += 2) out.push_back(S(m));
  for (auto f : {Family::T, Family::Td, Family::Th, Family::O, Family::Oh, Family::I, Family::Ih}) {
    out.push_back(simple(f));
  }
  return out;
}

Result views_vs_orbits() {
  Result r;
  std::mt19937_64 rng(606);
  const auto labels = symmetric_labels();
  for (int i = 0; i < 200; ++i) {
    const Label label = labels[static_cast<std::size_t>(i) % labels.size()];
    const int orbits = 1 + (i / static_cast<int>(labels.size())) % 3;
    std::vector<Vec3> pts = symmetric_instance(label, label.order() > 48 ? 1 : orbits, rng);
    pts = transformed(pts, rng);
    const std::string at = label.str() + "#" + std::to_string(i);
    const Configuration cfg(pts);
    const OrbitDecomposition dec = ordered_decomposition(cfg);
    std::vector<LocalView> views;
    for (std::size_t p = 0; p < cfg.size(); ++p) views.push_back(local_view(cfg, p, dec.enclosing));
    for (std::size_t p = 0; p < cfg.size(); ++p) {
      for (std::size_t q = p + 1; q < cfg.size(); ++q) {
        const bool same_view = compare_views(views[p], views[q]) == 0;
        const bool same_orbit = dec.orbit_of[p] == dec.orbit_of[q];
        if (same_view != same_orbit) r.fail(at + " view/orbit mismatch");
      }
    }
    std::vector<std::size_t> perm(pts.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vec3> shuffled;
    for (auto k : perm) shuffled.push_back(pts[k]);
    const OrbitDecomposition other = ordered_decomposition(Configuration(shuffled));
    bool same = other.orbits.size() == dec.orbits.size();
    for (std::size_t o = 0; same && o < dec.orbits.size(); ++o) {
      std::set<std::size_t> a(dec.orbits[o].begin(), dec.orbits[o].end());
      std::set<std::size_t> b;
      for (auto k : other.orbits[o]) b.insert(perm[k]);
      same = a == b;
    }
    if (!same) r.fail(at + " decomposition depends on point order");
  }
  return r;
}

// 7 ------------------------------------------------------------------------
Result oracle_equivalence() {
  Result r;
  std::mt19937_64 rng(707);
  const auto labels = symmetric_labels();
  std::vector<std::vector<Vec3>> instances;
  for (int i = 0; i < 240; ++i) {
    const Label label = labels[static_cast<std::size_t>(i) % labels.size()];
    int orbits = 1 + (i / static_cast<int>(labels.size())) % 3;
    while (orbits > 1 && label.order() * orbits > 60) --orbits;
    if (label.order() > 60) continue;
    instances.push_back(transformed(symmetric_instance(label, orbits, rng), rng));
  }
  const Solid solids[] = {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube,
                          Solid::Dodecahedron, Solid::Icosahedron, Solid::Icosidodecahedron};
  for (auto s : solids) instances.push_back(transformed(solid(s), rng));
  for (int k = 3; k <= 8; ++k) {
    instances.push_back(transformed(prism(k, 0.8), rng));
    instances.push_back(transformed(antiprism(k, 0.8), rng));
    instances.push_back(transformed(pyramid(k, 1.0), rng));
  }
  std::uniform_int_distribution<int> n(4, 60);
  while (instances.size() < 300) instances.push_back(random_points(n(rng), rng));

  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i].size() > 60) {
      r.fail("instance " + std::to_string(i) + " too large");
      continue;
    }
    const oracle::Comparison c = oracle::compare(instances[i]);
    if (!c.pass()) r.fail("instance " + std::to_string(i) + ": " + c.detail);
  }
  r.detail = std::to_string(instances.size()) + " instances" + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

// 8 ------------------------------------------------------------------------
Result equivariance() {
  Result r;
  std::mt19937_64 rng(808);
  std::vector<std::vector<Vec3>> snapshots;
  for (auto s : {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube, Solid::Dodecahedron, Solid::Icosahedron,
                 Solid::Icosidodecahedron}) {
    snapshots.push_back(solid(s));
  }
  for (int k = 3; k <= 6; ++k) {
    snapshots.push_back(prism(k, 0.7));
    snapshots.push_back(antiprism(k, 0.7));
    snapshots.push_back(with_equator(prism(k, 0.7), k, 0.5, 0.0));
    snapshots.push_back(with_equator(antiprism(k, 0.9), k, 0.4, 0.3));
    snapshots.push_back(pyramid(k, 1.0));
  }
  const auto labels = symmetric_labels();
  for (std::size_t i = 0; snapshots.size() < 100; ++i) {
    const Label label = labels[i % labels.size()];
    snapshots.push_back(symmetric_instance(label, label.order() > 24 ? 1 : 2, rng));
  }

  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    const Configuration cfg(transformed(snapshots[i], rng));
    const PointGroup theta = detect_symmetries(cfg);
    const double tol = kEquivariance * cfg.diameter();
    std::uniform_int_distribution<std::size_t> pick(0, cfg.size() - 1);
    for (std::size_t p : {std::size_t{0}, pick(rng)}) {
      const LocalFrame frame{cfg[p], random_orthogonal(rng, true), 0.5 + 1.5 * std::generate_canonical<double, 53>(rng)};
      auto intent = [&](const LocalFrame& f) {
        std::vector<Vec3> local;
        for (const auto& x : cfg.points()) local.push_back(f.to_local(x));
        return f.to_global(step(local, cfg.tol()).destination);
      };
      const Vec3 base = intent(frame);
      for (const auto& g : theta.elements) {
        const Vec3 gp = theta.center + g * (cfg[p] - theta.center);
        const LocalFrame moved{gp, g * frame.orientation, frame.scale};
        const Vec3 expected = theta.center + g * (base - theta.center);
        if ((intent(moved) - expected).norm() > tol) {
          r.fail("snapshot " + std::to_string(i) + " (" + theta.label.str() + ")");
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* name;
    double limit_s;
    Result (*body)();
  };
  const Criterion all[] = {
      {"solid symmetricity", 1.0, solid_symmetricity},
      {"go-to-center outcomes", 30.0, go_to_center_outcomes},
      {"group metadata", 5.0, group_metadata},
      {"plane formation success", 120.0, formation},
      {"impossibility witnesses", 30.0, impossibility_witnesses},
      {"views vs orbits", 60.0, views_vs_orbits},
      {"oracle equivalence", 300.0, oracle_equivalence},
      {"equivariance", 60.0, equivariance},
  };
  int failed = 0;
  for (int id = 1; id <= 8; ++id) {
    if (argc > 1 && std::to_string(id) != argv[1]) continue;
    const auto& c = all[id - 1];
    failed += report(id, c.name, c.limit_s, c.body);
  }
  return failed == 0 ? 0 : 1;
}
