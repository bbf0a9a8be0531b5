#include <algorithm>
#include <cmath>
#include <limits>

#include "planeform/algorithm.hpp"

namespace planeform {

namespace {

std::optional<Plane> plane_from(const Vec3& point, const Vec3& normal, double eps) {
  if (normal.norm() <= eps) return std::nullopt;
  return Plane::through(point, normal);
}

Plane cs_plane(const Situation& s) {
  const double eps = s.cfg.length_tol();
  const Vec3 n = s.theta.mirrors.front().normal;
  std::vector<Vec3> lines;  // midpoints of perpendicular pairs
  std::vector<Vec3> points;
  for (const auto& orbit : s.dec.orbits) {
    if (orbit.size() == 2) lines.push_back(0.5 * (s.cfg[orbit[0]] + s.cfg[orbit[1]]));
    else points.push_back(s.cfg[orbit[0]]);
  }
  if (lines.empty()) throw Error("no target plane");
  std::vector<Vec3> partners(lines.begin() + 1, lines.end());
  partners.insert(partners.end(), points.begin(), points.end());
  for (const auto& x : partners) {
    if (auto p = plane_from(lines.front(), n.cross(x - lines.front()), eps)) return *p;
  }
  throw Error("no target plane");
}

Plane ci_plane(const Situation& s) {
  const double eps = s.cfg.length_tol();
  const Vec3 c = s.enclosing.center;
  const Vec3 first = s.cfg[s.dec.orbits.front()[0]] - c;
  for (std::size_t o = 1; o < s.dec.orbits.size(); ++o) {
    const Vec3 d = s.cfg[s.dec.orbits[o][0]] - c;
    if (auto p = plane_from(c, first.normalized().cross(d), eps)) return *p;
  }
  throw Error("no target plane");
}

Plane c1_plane(const Situation& s) {
  const double eps = s.cfg.length_tol();
  const Vec3 p1 = s.cfg[s.dec.orbits[0][0]];
  const Vec3 p2 = s.cfg[s.dec.orbits[1][0]];
  for (std::size_t o = 2; o < s.dec.orbits.size(); ++o) {
    const Vec3 p3 = s.cfg[s.dec.orbits[o][0]];
    if (auto p = plane_from(p1, (p2 - p1).normalized().cross(p3 - p1), eps)) return *p;
  }
  throw Error("no target plane");
}

Plane c2h_plane(const Situation& s) {
  const double eps = s.cfg.length_tol();
  const Vec3 c = s.enclosing.center;
  const Vec3 a = *s.theta.principal_axis;
  for (const auto& orbit : s.dec.orbits) {
    const Vec3 d = s.cfg[orbit[0]] - c;
    if (auto p = plane_from(c, a.cross(d), eps)) return *p;
  }
  throw Error("no target plane");
}

struct Tentative {
  std::size_t robot;
  std::vector<Vec3> points;
};

double min_distance(const Vec3& t, const std::vector<Vec3>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, (p - t).norm());
  return best;
}

}  // namespace

Plane phase4_target_plane(const Situation& s) {
  const Label& l = s.theta.label;
  switch (l.family) {
    case Family::C1: return c1_plane(s);
    case Family::Ci: return ci_plane(s);
    case Family::Cs: return cs_plane(s);
    case Family::Ch:
      if (l.param == 2) return c2h_plane(s);
      break;
    default:
      break;
  }
  if (!s.theta.principal_axis) throw Error("no target plane");
  return Plane::through(s.enclosing.center, *s.theta.principal_axis);
}

std::vector<std::vector<Vec3>> phase5_destinations(const Situation& s) {
  const Plane plane = s.target ? *s.target : phase4_target_plane(s);
  const std::size_t n = s.cfg.size();
  const double eps = 10 * s.cfg.length_tol();
  const Vec3 hub = project_to_plane(s.enclosing.center, plane);

  std::vector<Vec3> foot(n);
  for (std::size_t i = 0; i < n; ++i) foot[i] = project_to_plane(s.cfg[i], plane);

  double delta = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = (foot[i] - foot[j]).norm();
      if (d > eps) delta = std::min(delta, d);
    }
  }
  delta = std::isfinite(delta) ? delta / 4 : s.enclosing.radius;

  const std::size_t m = s.dec.orbits.size();
  std::vector<std::vector<Vec3>> out(n);
  std::vector<Vec3> occupied;

  for (std::size_t oi = 0; oi < m; ++oi) {
    const auto& members = s.dec.orbits[oi];
    std::vector<Tentative> cur;

    std::vector<bool> grouped(members.size(), false);
    for (std::size_t x = 0; x < members.size(); ++x) {
      if (grouped[x]) continue;
      std::vector<std::size_t> group{members[x]};
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (!grouped[y] && (foot[members[y]] - foot[members[x]]).norm() <= eps) {
          grouped[y] = true;
          group.push_back(members[y]);
        }
      }
      const Vec3 f = foot[members[x]];
      if (group.size() == 1) {
        cur.push_back({members[x], {f}});
        continue;
      }
      // Orbit-mates over one foot: offset each toward the projection of its
      // nearest point(s) in the first orbit that separates them.
      std::vector<std::vector<Vec3>> dirs;
      bool resolved = false;
      for (std::size_t oj = 0; oj < m && !resolved; ++oj) {
        dirs.assign(group.size(), {});
        bool usable = true;
        for (std::size_t g = 0; g < group.size() && usable; ++g) {
          double best = std::numeric_limits<double>::infinity();
          for (auto q : s.dec.orbits[oj]) {
            if ((foot[q] - f).norm() > eps) best = std::min(best, (s.cfg[q] - s.cfg[group[g]]).norm());
          }
          for (auto q : s.dec.orbits[oj]) {
            if ((foot[q] - f).norm() <= eps) continue;
            if ((s.cfg[q] - s.cfg[group[g]]).norm() > best + eps) continue;
            const Vec3 d = (foot[q] - f).normalized();
            if (min_distance(d, dirs[g]) > 1e-7) dirs[g].push_back(d);
          }
          usable = !dirs[g].empty();
        }
        if (!usable) continue;
        resolved = true;
        for (std::size_t g = 0; g < group.size() && resolved; ++g) {
          for (std::size_t h = g + 1; h < group.size() && resolved; ++h) {
            for (const auto& d : dirs[g]) resolved = resolved && min_distance(d, dirs[h]) > 1e-7;
          }
        }
      }
      if (!resolved) throw Error("unresolvable landing");
      const double rho = delta * static_cast<double>(oi + 1) / static_cast<double>(m + 1);
      for (std::size_t g = 0; g < group.size(); ++g) {
        Tentative t{group[g], {}};
        for (const auto& d : dirs[g]) t.points.push_back(f + rho * d);
        cur.push_back(std::move(t));
      }
    }

    std::vector<Vec3> mine;
    for (const auto& t : cur) mine.insert(mine.end(), t.points.begin(), t.points.end());
    for (auto& t : cur) {
      std::vector<Vec3> moved;
      for (const auto& p : t.points) {
        if (min_distance(p, occupied) > eps) {
          moved.push_back(p);
          continue;
        }
        std::vector<Vec3> others;
        for (const auto& q : occupied) {
          if ((q - p).norm() > eps) others.push_back(q);
        }
        for (const auto& q : mine) {
          if ((q - p).norm() > eps) others.push_back(q);
        }
        const double r = others.empty() ? s.enclosing.radius : min_distance(p, others);
        if ((hub - p).norm() > eps) {
          moved.push_back(p + 0.25 * r * (hub - p).normalized());
        } else {
          for (const auto& q : others) {
            if ((q - p).norm() <= r + eps) moved.push_back(p + 0.25 * r * (q - p).normalized());
          }
        }
      }
      t.points = std::move(moved);
    }

    for (std::size_t x = 0; x < cur.size(); ++x) {
      for (const auto& p : cur[x].points) {
        if (min_distance(p, occupied) <= eps) throw Error("unresolvable landing");
        for (std::size_t y = x + 1; y < cur.size(); ++y) {
          if (min_distance(p, cur[y].points) <= eps) throw Error("unresolvable landing");
        }
      }
    }
    for (auto& t : cur) {
      occupied.insert(occupied.end(), t.points.begin(), t.points.end());
      out[t.robot] = std::move(t.points);
    }
  }
  return out;
}

}  // namespace planeform
