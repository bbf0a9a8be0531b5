#include "planeform/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace planeform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhi = std::numbers::phi;

void cyclic(std::vector<Vec3>& out, double x, double y, double z) {
  out.emplace_back(x, y, z);
  out.emplace_back(z, x, y);
  out.emplace_back(y, z, x);
}

std::vector<Vec3> unit_sphere(std::vector<Vec3> pts) {
  const double r = pts.front().norm();
  for (auto& p : pts) p /= r;
  return pts;
}

std::vector<double> distance_profile(const std::vector<Vec3>& pts) {
  std::vector<double> d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back((pts[i] - pts[j]).norm());
  }
  std::sort(d.begin(), d.end());
  const double top = d.empty() ? 1.0 : d.back();
  for (auto& x : d) x /= top;
  return d;
}

std::vector<Vec3> regular_polygon(int k, double radius, double z, double phase) {
  std::vector<Vec3> out;
  for (int j = 0; j < k; ++j) {
    const double a = phase + 2 * kPi * j / k;
    out.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
  }
  return out;
}

}  // namespace

std::string to_string(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Octahedron: return "octahedron";
    case Solid::Cube: return "cube";
    case Solid::Dodecahedron: return "dodecahedron";
    case Solid::Icosahedron: return "icosahedron";
    case Solid::Icosidodecahedron: return "icosidodecahedron";
  }
  return "?";
}

std::vector<Vec3> solid(Solid s) {
  std::vector<Vec3> out;
  switch (s) {
    case Solid::Tetrahedron:
      out = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Solid::Octahedron:
      out = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case Solid::Cube:
      for (int m = 0; m < 8; ++m) out.emplace_back(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1);
      break;
    case Solid::Icosahedron:
      for (double a : {1.0, -1.0})
        for (double b : {kPhi, -kPhi}) cyclic(out, 0, a, b);
      break;
    case Solid::Dodecahedron:
      for (int m = 0; m < 8; ++m) out.emplace_back(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1);
      for (double a : {1 / kPhi, -1 / kPhi})
        for (double b : {kPhi, -kPhi}) cyclic(out, 0, a, b);
      break;
    case Solid::Icosidodecahedron:
      for (double a : {kPhi, -kPhi}) cyclic(out, 0, 0, a);
      for (double a : {0.5, -0.5})
        for (double b : {kPhi / 2, -kPhi / 2})
          for (double c : {kPhi * kPhi / 2, -kPhi * kPhi / 2}) cyclic(out, a, b, c);
      break;
  }
  return unit_sphere(std::move(out));
}

std::vector<Vec3> prism(int k, double h) {
  if (k < 3 || !(h > 0)) throw Error("invalid prism parameters");
  auto out = regular_polygon(k, 1.0, h / 2, 0.0);
  auto bottom = regular_polygon(k, 1.0, -h / 2, 0.0);
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

std::vector<Vec3> antiprism(int k, double h) {
  if (k < 3 || !(h > 0)) throw Error("invalid antiprism parameters");
  auto out = regular_polygon(k, 1.0, h / 2, kPi / k);
  auto bottom = regular_polygon(k, 1.0, -h / 2, 0.0);
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

std::vector<Vec3> pyramid(int k, double h) {
  if (k < 3 || !(h > 0)) throw Error("invalid pyramid parameters");
  auto out = regular_polygon(k, 1.0, 0.0, 0.0);
  out.emplace_back(0, 0, h);
  return out;
}

std::vector<Vec3> normalize(std::vector<Vec3> points) {
  const Ball b = seb(Configuration(points));
  const double r = b.radius > 0 ? b.radius : 1.0;
  for (auto& p : points) p = (p - b.center) / r;
  return points;
}

std::optional<Solid> match_solid(const std::vector<Vec3>& points, double rel_tol) {
  if (points.size() < 4) return std::nullopt;
  Vec3 c = Vec3::Zero();
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  const double r = (points.front() - c).norm();
  for (const auto& p : points) {
    if (std::abs((p - c).norm() - r) > rel_tol * r) return std::nullopt;
  }
  const auto profile = distance_profile(points);
  for (Solid s : {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube, Solid::Dodecahedron, Solid::Icosahedron,
                  Solid::Icosidodecahedron}) {
    const auto ref = solid(s);
    if (ref.size() != points.size()) continue;
    const auto want = distance_profile(ref);
    bool same = true;
    for (std::size_t i = 0; i < want.size() && same; ++i) same = std::abs(want[i] - profile[i]) <= 10 * rel_tol;
    if (same) return s;
  }
  return std::nullopt;
}

bool breaks_polyhedral(Solid s) {
  return s == Solid::Tetrahedron || s == Solid::Octahedron || s == Solid::Dodecahedron || s == Solid::Icosidodecahedron;
}

Mat3 random_orthogonal(std::mt19937_64& rng, bool allow_improper) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  Mat3 m = q.toRotationMatrix();
  if (allow_improper && std::bernoulli_distribution(0.5)(rng)) m = -m;
  return m;
}

Vec3 generic_point(const std::vector<Mat3>& group, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.3, 1.0);
  for (;;) {
    Vec3 x(g(rng), g(rng), g(rng));
    if (x.norm() < 1e-6) continue;
    x = x.normalized() * u(rng);
    bool ok = true;
    for (const auto& m : group) {
      if (same_matrix(m, Mat3::Identity())) continue;
      ok = ok && (m * x - x).norm() > 0.05 * x.norm();
    }
    if (ok) return x;
  }
}

std::vector<Vec3> random_symmetric(const Label& label, int orbits, std::mt19937_64& rng) {
  if (orbits < 1) throw Error("invalid orbit count");
  const auto group = canonical_group(label);
  std::vector<Vec3> out;
  std::uniform_real_distribution<double> jitter(0.1, 0.9);
  for (int o = 0; o < orbits; ++o) {
    Vec3 seed = generic_point(group, rng).normalized();
    seed *= 0.3 + 0.7 * (o + jitter(rng)) / orbits;
    for (const auto& m : group) out.push_back(m * seed);
  }
  return out;
}

std::vector<Vec3> random_points(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error("invalid point count");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> out;
  while (static_cast<int>(out.size()) < n) {
    Vec3 p(u(rng), u(rng), u(rng));
    if (p.norm() <= 1.0) out.push_back(p);
  }
  return out;
}

}  // namespace planeform
