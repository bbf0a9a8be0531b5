#include "planeform/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace planeform {

namespace {

constexpr double kPi = std::numbers::pi;

bool on_plane(const Situation& s, std::size_t i, const Plane& plane) {
  return std::abs(plane.signed_distance(s.cfg[i])) <= s.cfg.length_tol();
}

double axis_distance(const Vec3& d, const Vec3& axis) { return (d - d.dot(axis) * axis).norm(); }

bool orbit_on_plane(const Situation& s, std::size_t orbit, const Plane& plane) {
  const auto& members = s.dec.orbits[orbit];
  return std::all_of(members.begin(), members.end(), [&](std::size_t i) { return on_plane(s, i, plane); });
}

bool orbit_on_axis(const Situation& s, std::size_t orbit) {
  const Vec3 a = *s.theta.principal_axis;
  const auto& members = s.dec.orbits[orbit];
  return std::all_of(members.begin(), members.end(), [&](std::size_t i) {
    return axis_distance(s.cfg[i] - s.enclosing.center, a) <= s.cfg.length_tol();
  });
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int principal_fold(const PointGroup& g) {
  for (const auto& ax : g.axes) {
    if (std::abs(ax.direction.dot(*g.principal_axis)) > 1.0 - 1e-6) return ax.fold;
  }
  return 1;
}

const Vec3& lex_min(const std::vector<Vec3>& v) { return *std::min_element(v.begin(), v.end(), lex_less); }

// Orbits whose members pair up over the same foot on the target plane.
std::vector<std::size_t> prism_orbits(const Situation& s) {
  std::vector<std::size_t> out;
  const Vec3 a = *s.theta.principal_axis;
  const double eps = s.cfg.length_tol();
  for (std::size_t o = 0; o < s.dec.orbits.size(); ++o) {
    const auto& m = s.dec.orbits[o];
    bool paired = false;
    for (std::size_t x = 0; x < m.size() && !paired; ++x) {
      const Vec3 dx = s.cfg[m[x]] - s.enclosing.center;
      if (axis_distance(dx, a) <= eps) continue;
      for (std::size_t y = x + 1; y < m.size() && !paired; ++y) {
        const Vec3 fx = project_to_plane(s.cfg[m[x]], *s.target);
        const Vec3 fy = project_to_plane(s.cfg[m[y]], *s.target);
        paired = (fx - fy).norm() <= eps;
      }
    }
    if (paired) out.push_back(o);
  }
  return out;
}

bool sigma_h_invariant(const Situation& s, std::size_t orbit) {
  const Mat3 sigma = reflection(*s.theta.principal_axis);
  const OrthoMap map{sigma, s.enclosing.center};
  const auto& m = s.dec.orbits[orbit];
  return std::all_of(m.begin(), m.end(), [&](std::size_t i) {
    const auto j = s.cfg.find(map(s.cfg[i]));
    return j && contains(m, *j);
  });
}

// Signed azimuthal offset from p to q about the axis through c.
double azimuth_offset(const Vec3& p, const Vec3& q, const Vec3& c, const Vec3& a) {
  Vec3 u = p - c;
  Vec3 v = q - c;
  u -= u.dot(a) * a;
  v -= v.dot(a) * a;
  return std::atan2(a.dot(u.cross(v)), u.dot(v));
}

std::optional<double> twist_angle(const Situation& s, std::size_t self, const std::vector<std::size_t>& prisms) {
  const Vec3 a = *s.theta.principal_axis;
  const Vec3 c = s.enclosing.center;
  const double eps = s.cfg.length_tol();
  for (std::size_t j = 0; j < s.dec.orbits.size(); ++j) {
    if (contains(prisms, j) || sigma_h_invariant(s, j)) continue;
    struct Cand {
      double dist;
      double dphi;
    };
    std::vector<Cand> cands;
    for (auto q : s.dec.orbits[j]) {
      if (axis_distance(s.cfg[q] - c, a) <= eps) continue;
      const double dphi = azimuth_offset(s.cfg[self], s.cfg[q], c, a);
      if (std::abs(dphi) < 1e-7 || std::abs(dphi) > kPi - 1e-7) continue;
      cands.push_back({(s.cfg[q] - s.cfg[self]).norm(), dphi});
    }
    if (cands.empty()) continue;
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.dist < y.dist; });
    if (cands.size() > 1 && cands[1].dist - cands[0].dist <= eps) continue;
    return cands[0].dphi;
  }
  return std::nullopt;
}

std::vector<Vec3> twisted(const Situation& s, const std::vector<std::size_t>& prisms, double factor) {
  std::vector<Vec3> out = s.cfg.points();
  const Vec3 a = *s.theta.principal_axis;
  const Vec3 c = s.enclosing.center;
  for (auto o : prisms) {
    for (auto i : s.dec.orbits[o]) {
      const auto dphi = twist_angle(s, i, prisms);
      if (!dphi) throw Error("unsolvable structure");
      out[i] = c + rotation(a, factor * *dphi) * (s.cfg[i] - c);
    }
  }
  return out;
}

bool twist_ok(const Situation& s, const std::vector<Vec3>& moved) {
  const Configuration next(moved, s.cfg.tol());
  if (!next.distinct()) return false;
  const double eps = s.cfg.length_tol();
  for (const auto& orbit : s.dec.orbits) {
    for (std::size_t x = 0; x < orbit.size(); ++x) {
      for (std::size_t y = x + 1; y < orbit.size(); ++y) {
        const Vec3 fx = project_to_plane(moved[orbit[x]], *s.target);
        const Vec3 fy = project_to_plane(moved[orbit[y]], *s.target);
        if ((fx - fy).norm() <= eps) return false;
      }
    }
  }
  return true;
}

std::vector<Vec3> directions() {
  std::vector<Vec3> out;
  const int count = 257;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double r = std::sqrt(1.0 - z * z);
    const double phi = 0.137 + golden * i;
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

}  // namespace

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Terminal: return "Terminal";
    case Phase::PrepCenter: return "PrepCenter";
    case Phase::PrepType1: return "PrepType1";
    case Phase::PrepType2: return "PrepType2";
    case Phase::GoToCenter: return "GoToCenter";
    case Phase::RemoveMirror: return "RemoveMirror";
    case Phase::TwistPrism: return "TwistPrism";
    case Phase::FinalLanding: return "FinalLanding";
    case Phase::Unsolvable: return "Unsolvable";
  }
  return "?";
}

Phase phase_from_string(const std::string& s) {
  for (Phase p : {Phase::Terminal, Phase::PrepCenter, Phase::PrepType1, Phase::PrepType2, Phase::GoToCenter,
                  Phase::RemoveMirror, Phase::TwistPrism, Phase::FinalLanding, Phase::Unsolvable}) {
    if (to_string(p) == s) return p;
  }
  throw Error("unknown phase: " + s);
}

Situation analyse(const Configuration& snapshot) {
  Situation s;
  s.cfg = snapshot;
  if (!s.cfg.distinct()) throw Error("multiplicity");
  s.enclosing = seb(s.cfg);
  if (s.cfg.size() <= 3 || coplanar(s.cfg)) {
    s.phase = Phase::Terminal;
    return s;
  }

  if (auto c = s.cfg.find(s.enclosing.center)) {
    s.center_robot = c;
    std::vector<Vec3> rest;
    for (std::size_t i = 0; i < s.cfg.size(); ++i) {
      if (i != *c) rest.push_back(s.cfg[i]);
    }
    const Configuration others(rest, s.cfg.tol());
    s.inner_radius = innermost_empty_ball(others, s.enclosing).radius;
    s.theta = detect_symmetries(others);
    s.phase = Phase::PrepCenter;
    return s;
  }

  s.theta = detect_symmetries(s.cfg);
  s.gamma = rotation_group(s.theta);
  s.dec = ordered_decomposition(s.cfg, s.theta);
  s.enclosing = s.dec.enclosing;
  s.inner_radius = s.dec.radii.front();

  if (s.gamma.label.polyhedral()) {
    for (std::size_t o = 0; o < s.dec.orbits.size(); ++o) {
      std::vector<Vec3> pts;
      for (auto i : s.dec.orbits[o]) pts.push_back(s.cfg[i]);
      const auto solid = match_solid(pts);
      if (solid && breaks_polyhedral(*solid)) {
        s.polyhedral_orbit = o;
        s.solid = solid;
        s.phase = o == 0 ? Phase::GoToCenter : Phase::PrepType1;
        return s;
      }
    }
    s.phase = Phase::Unsolvable;
    s.reason = "3d";
    return s;
  }

  const Label& g = s.gamma.label;
  const bool two_d = (g.family == Family::C && g.param >= 3) || g.family == Family::D;
  if (two_d && s.theta.horizontal_mirror) {
    const Plane sigma = *s.theta.horizontal_mirror;
    std::vector<std::size_t> on_mirror;
    for (std::size_t o = 0; o < s.dec.orbits.size(); ++o) {
      if (orbit_on_plane(s, o, sigma)) on_mirror.push_back(o);
    }
    if (on_mirror.empty()) {
      s.phase = Phase::Unsolvable;
      s.reason = "mirror";
      return s;
    }
    const double eps = s.cfg.length_tol();
    if (on_mirror.front() == 0 && (s.dec.radii.size() == 1 || s.dec.radii[0] < s.dec.radii[1] - eps)) {
      s.mirror_orbit = 0;
      s.phase = Phase::RemoveMirror;
      return s;
    }
    s.mirror_orbit = on_mirror.front();
    for (std::size_t o = 0; o < s.dec.orbits.size(); ++o) {
      if (!orbit_on_plane(s, o, sigma) && !orbit_on_axis(s, o)) {
        s.shrink_orbit = o;
        break;
      }
    }
    s.phase = Phase::PrepType2;
    return s;
  }

  s.target = phase4_target_plane(s);
  if (g.family == Family::D && !prism_orbits(s).empty()) {
    s.phase = Phase::TwistPrism;
    return s;
  }
  s.phase = Phase::FinalLanding;
  return s;
}

Phase dispatch(const Configuration& snapshot) {
  const Situation s = analyse(snapshot);
  if (s.phase == Phase::Unsolvable) throw Error("unsolvable structure");
  return s.phase;
}

Vec3 prep_center(const Situation& s, std::size_t self) {
  if (!s.center_robot || *s.center_robot != self) return s.cfg[self];
  const double radius = s.inner_radius / 4;
  const double margin = 0.01 * radius;
  const Vec3 c = s.enclosing.center;
  for (const auto& d : directions()) {
    bool clear = true;
    for (const auto& ax : s.theta.axes) clear = clear && axis_distance(radius * d, ax.direction) > margin;
    for (const auto& m : s.theta.mirrors) clear = clear && std::abs(m.normal.dot(radius * d)) > margin;
    if (clear) return c + radius * d;
  }
  throw Error("no clearing direction");
}

Vec3 prep_type1(const Situation& s, std::size_t self) {
  if (!contains(s.dec.orbits[*s.polyhedral_orbit], self)) return s.cfg[self];
  const Vec3 c = s.enclosing.center;
  return c + (s.cfg[self] - c).normalized() * (s.inner_radius / 2);
}

Vec3 prep_type2(const Situation& s, std::size_t self) {
  const Vec3 c = s.enclosing.center;
  const Vec3 d = s.cfg[self] - c;
  if (contains(s.dec.orbits[*s.mirror_orbit], self)) return c + d.normalized() * (s.inner_radius / 2);
  if (s.shrink_orbit && contains(s.dec.orbits[*s.shrink_orbit], self)) {
    const Vec3 a = *s.theta.principal_axis;
    const double h = d.dot(a);
    const Vec3 w = d - h * a;
    const double floor_r = 0.75 * s.inner_radius;
    const double clamp = std::sqrt(std::max(0.0, floor_r * floor_r - h * h));
    const double target = std::min(w.norm(), std::max(w.norm() / 10, clamp));
    return c + h * a + w.normalized() * target;
  }
  return s.cfg[self];
}

std::vector<Vec3> go_to_center_candidates(const Situation& s, std::size_t self) {
  const auto& members = s.dec.orbits[*s.polyhedral_orbit];
  const auto pos = std::find(members.begin(), members.end(), self);
  if (pos == members.end()) return {};
  std::vector<Vec3> pts;
  for (auto i : members) pts.push_back(s.cfg[i]);
  const Configuration poly(pts, s.cfg.tol());
  const auto me = static_cast<std::size_t>(pos - members.begin());
  const double eps = poly.min_separation() / 100;
  const Vec3& p = s.cfg[self];
  std::vector<std::pair<Vec3, Vec3>> faces;  // centroid, destination
  for (const auto& face : hull_faces_at(poly, me)) {
    if (s.solid == Solid::Icosidodecahedron && face.vertices.size() != 5) continue;
    faces.emplace_back(face.centroid, face.centroid - eps * (face.centroid - p).normalized());
  }
  std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  std::vector<Vec3> out;
  for (const auto& f : faces) out.push_back(f.second);
  return out;
}

Vec3 go_to_center(const Situation& s, std::size_t self) {
  const auto cands = go_to_center_candidates(s, self);
  return cands.empty() ? s.cfg[self] : cands.front();
}

PrismShape fictitious_prism(int k, double r) {
  const double sn = std::sin(kPi / k);
  PrismShape p;
  p.side = 2 * r / std::sqrt(1 + 1 / (100 * sn * sn));
  p.base_radius = p.side / (20 * sn);
  return p;
}

namespace {

std::vector<Vec3> own_prism_vertices(const Situation& s, std::size_t self) {
  const Vec3 c = s.enclosing.center;
  const Vec3 a = *s.theta.principal_axis;
  const Vec3 d = s.cfg[self] - c;
  const Vec3 w = d - d.dot(a) * a;
  if (w.norm() <= s.cfg.length_tol()) return {};
  const PrismShape ps = fictitious_prism(principal_fold(s.theta), s.inner_radius);
  const Vec3 base = c + ps.base_radius * w.normalized();
  return {base + 0.5 * ps.side * a, base - 0.5 * ps.side * a};
}

}  // namespace

Vec3 phase1_remove_mirror(const Situation& s, std::size_t self) {
  if (!contains(s.dec.orbits[*s.mirror_orbit], self)) return s.cfg[self];
  const auto v = own_prism_vertices(s, self);
  if (v.empty()) throw Error("mirror robot on the principal axis");
  return lex_min(v);
}

Vec3 phase2_twist(const Situation& s, std::size_t self) {
  const auto prisms = prism_orbits(s);
  if (!contains(prisms, s.dec.orbit_of[self])) return s.cfg[self];
  auto moved = twisted(s, prisms, 0.5);
  if (!twist_ok(s, moved)) moved = twisted(s, prisms, 1.0 / 3.0);
  return moved[self];
}

Vec3 unsolvable_move(const Situation& s, std::size_t self) {
  if (s.reason == "3d") {
    const auto& p1 = s.dec.orbits.front();
    if (!contains(p1, self) || p1.size() < 4) return s.cfg[self];
    std::vector<Vec3> pts;
    for (auto i : p1) pts.push_back(s.cfg[i]);
    const Configuration poly(pts, s.cfg.tol());
    if (coplanar(poly)) return s.cfg[self];
    Situation t = s;
    t.polyhedral_orbit = 0;
    t.solid.reset();
    return go_to_center(t, self);
  }
  if (s.reason == "mirror") {
    if (!contains(s.dec.orbits.front(), self)) return s.cfg[self];
    const auto v = own_prism_vertices(s, self);
    if (v.empty()) return s.cfg[self];
    const double side = (s.cfg[self] - s.enclosing.center).dot(*s.theta.principal_axis);
    return side > 0 ? v[0] : v[1];
  }
  return s.cfg[self];
}

MoveIntent step(const std::vector<Vec3>& snapshot, double tol) {
  std::vector<Vec3> pts = snapshot;
  std::sort(pts.begin(), pts.end(), lex_less);
  const Configuration cfg(pts, tol);
  const std::size_t self = cfg.nearest(Vec3::Zero());
  const Situation s = analyse(cfg);
  MoveIntent intent;
  intent.phase = s.phase;
  switch (s.phase) {
    case Phase::Terminal: intent.destination = cfg[self]; break;
    case Phase::PrepCenter: intent.destination = prep_center(s, self); break;
    case Phase::PrepType1: intent.destination = prep_type1(s, self); break;
    case Phase::PrepType2: intent.destination = prep_type2(s, self); break;
    case Phase::GoToCenter: intent.destination = go_to_center(s, self); break;
    case Phase::RemoveMirror: intent.destination = phase1_remove_mirror(s, self); break;
    case Phase::TwistPrism: intent.destination = phase2_twist(s, self); break;
    case Phase::FinalLanding: intent.destination = lex_min(phase5_destinations(s)[self]); break;
    case Phase::Unsolvable:
      intent.destination = unsolvable_move(s, self);
      intent.note = s.reason;
      break;
  }
  if (!intent.destination.allFinite()) throw Error("non-finite destination");
  if ((intent.destination - cfg[self]).norm() <= cfg.length_tol()) intent.destination = cfg[self];
  return intent;
}

}  // namespace planeform
