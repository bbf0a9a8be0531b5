#include "planeform/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace planeform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-6;
constexpr double kAltitudeTol = 1e-7;

int cmp(double a, double b, double tol) {
  if (a < b - tol) return -1;
  if (a > b + tol) return 1;
  return 0;
}

int compare_entries(const ViewEntry& a, const ViewEntry& b) {
  if (int c = cmp(a.altitude, b.altitude, kAltitudeTol)) return c;
  if (int c = cmp(a.latitude, b.latitude, kAngleTol)) return c;
  return cmp(a.longitude, b.longitude, kAngleTol);
}

}  // namespace

int compare_views(const LocalView& a, const LocalView& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (int c = compare_entries(a[i], b[i])) return c;
  }
  return cmp(static_cast<double>(a.size()), static_cast<double>(b.size()), 0.5);
}

std::vector<std::vector<std::size_t>> orbits(const Configuration& cfg, const PointGroup& group) {
  const std::size_t n = cfg.size();
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t e = 0; e < group.order(); ++e) {
      const auto j = cfg.find(group.map(e)(cfg[i]));
      if (!j) throw Error("group does not act on configuration");
      if (!done[*j]) {
        done[*j] = true;
        orbit.push_back(*j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

LocalView local_view(const Configuration& cfg, std::size_t observer) { return local_view(cfg, observer, seb(cfg)); }

LocalView local_view(const Configuration& cfg, std::size_t observer, const Ball& enclosing) {
  const Vec3 b = enclosing.center;
  const double radius = enclosing.radius > 0.0 ? enclosing.radius : 1.0;
  const double eps = cfg.length_tol();
  const Vec3 own = cfg[observer] - b;
  if (own.norm() <= eps) throw Error("observer at center");
  const Vec3 north = own.normalized();
  const std::size_t n = cfg.size();

  struct Polar {
    double altitude;
    double latitude;
    Vec3 flat;  // component orthogonal to north
    bool on_axis;
  };
  std::vector<Polar> polar;
  polar.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == observer) continue;
    const Vec3 d = cfg[i] - b;
    const double r = d.norm();
    Polar p{r / radius, 0.0, d - d.dot(north) * north, false};
    if (r > eps) p.latitude = std::acos(std::clamp(d.dot(north) / r, -1.0, 1.0));
    p.on_axis = p.flat.norm() <= eps;
    polar.push_back(p);
  }

  const ViewEntry self{own.norm() / radius, 0.0, 0.0};
  auto build = [&](const Vec3& u, double orientation) {
    const Vec3 v = orientation * north.cross(u);
    LocalView seq;
    seq.reserve(n);
    for (const auto& p : polar) {
      ViewEntry e{p.altitude, p.latitude, 0.0};
      if (!p.on_axis) {
        double lon = std::atan2(p.flat.dot(v), p.flat.dot(u));
        if (lon < 0.0) lon += kTwoPi;
        if (lon > kTwoPi - kAngleTol) lon = 0.0;
        e.longitude = lon;
      }
      seq.push_back(e);
    }
    std::sort(seq.begin(), seq.end(), [](const ViewEntry& a, const ViewEntry& c) { return compare_entries(a, c) < 0; });
    seq.insert(seq.begin(), self);
    return seq;
  };

  std::optional<LocalView> best;
  for (const auto& p : polar) {
    if (p.on_axis) continue;
    const Vec3 u = p.flat.normalized();
    for (double orientation : {1.0, -1.0}) {
      LocalView seq = build(u, orientation);
      if (!best || compare_views(seq, *best) < 0) best = std::move(seq);
    }
  }
  if (!best) best = build(any_orthogonal(north), 1.0);
  return *best;
}

OrbitDecomposition ordered_decomposition(const Configuration& cfg) { return ordered_decomposition(cfg, detect_symmetries(cfg)); }

OrbitDecomposition ordered_decomposition(const Configuration& cfg, const PointGroup& theta) {
  OrbitDecomposition out;
  out.enclosing = seb(cfg);
  const double eps = cfg.length_tol();
  for (const auto& p : cfg.points()) {
    if ((p - out.enclosing.center).norm() <= eps) throw Error("point at center");
  }
  out.group = theta;
  auto raw = orbits(cfg, theta);

  struct Entry {
    std::vector<std::size_t> members;
    double radius;
    LocalView view;
  };
  std::vector<Entry> entries;
  for (auto& o : raw) {
    const double r = (cfg[o.front()] - out.enclosing.center).norm();
    entries.push_back(Entry{std::move(o), r, {}});
  }
  for (auto& e : entries) {
    const bool tied = std::any_of(entries.begin(), entries.end(), [&](const Entry& f) {
      return &f != &e && cmp(f.radius, e.radius, eps) == 0;
    });
    if (tied) e.view = local_view(cfg, e.members.front(), out.enclosing);
  }
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (int c = cmp(a.radius, b.radius, eps)) return c < 0;
    return compare_views(a.view, b.view) < 0;
  });
  out.orbit_of.assign(cfg.size(), 0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (auto i : entries[k].members) out.orbit_of[i] = k;
    out.orbits.push_back(std::move(entries[k].members));
    out.radii.push_back(entries[k].radius);
    out.views.push_back(std::move(entries[k].view));
  }
  return out;
}

}  // namespace planeform
