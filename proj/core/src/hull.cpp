#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include "planeform/geometry.hpp"

namespace planeform {

namespace {

HullFace make_face(const Configuration& cfg, std::vector<std::size_t> members, const Vec3& normal) {
  HullFace face;
  face.normal = normal;
  for (auto i : members) face.centroid += cfg[i];
  face.centroid /= static_cast<double>(members.size());
  const Vec3 u = any_orthogonal(normal);
  const Vec3 v = normal.cross(u);
  auto angle = [&](std::size_t i) {
    const Vec3 d = cfg[i] - face.centroid;
    return std::atan2(d.dot(v), d.dot(u));
  };
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
  face.vertices = std::move(members);
  return face;
}

// Every vertex of a counter-clockwise polygon must be a strict left turn.
bool strictly_convex(const Configuration& cfg, const HullFace& face) {
  const std::size_t m = face.vertices.size();
  const double eps = cfg.length_tol() * cfg.diameter();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3& a = cfg[face.vertices[i]];
    const Vec3& b = cfg[face.vertices[(i + 1) % m]];
    const Vec3& c = cfg[face.vertices[(i + 2) % m]];
    if ((b - a).cross(c - b).dot(face.normal) <= eps) return false;
  }
  return true;
}

}  // namespace

namespace {

// Supporting face through points i, j, k, if that plane has every point on
// one side. `seen` holds the member lists of faces already reported.
std::optional<HullFace> supporting_face(const Configuration& cfg, std::size_t i, std::size_t j, std::size_t k,
                                        std::set<std::vector<std::size_t>>& seen) {
  const double eps = cfg.length_tol();
  Vec3 normal = (cfg[j] - cfg[i]).cross(cfg[k] - cfg[i]);
  const double len = normal.norm();
  if (len <= eps * cfg.diameter()) return std::nullopt;
  normal /= len;
  bool above = false;
  bool below = false;
  for (std::size_t q = 0; q < cfg.size() && !(above && below); ++q) {
    const double d = normal.dot(cfg[q] - cfg[i]);
    above = above || d > eps;
    below = below || d < -eps;
  }
  if (above && below) return std::nullopt;
  std::vector<std::size_t> on;
  for (std::size_t q = 0; q < cfg.size(); ++q) {
    if (std::abs(normal.dot(cfg[q] - cfg[i])) <= eps) on.push_back(q);
  }
  if (!seen.insert(on).second) return std::nullopt;
  if (above) normal = -normal;
  HullFace face = make_face(cfg, std::move(on), normal);
  if (!strictly_convex(cfg, face)) throw Error("points not in convex position");
  return face;
}

void require_solid(const Configuration& cfg) {
  if (cfg.size() < 4) throw Error("degenerate hull");
  if (coplanar(cfg)) throw Error("degenerate hull");
}

}  // namespace

HullAdjacency hull_face_adjacency(const Configuration& cfg) {
  require_solid(cfg);
  const std::size_t n = cfg.size();
  std::set<std::vector<std::size_t>> seen;
  HullAdjacency out;
  out.incident.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (auto f = supporting_face(cfg, i, j, k, seen)) out.faces.push_back(std::move(*f));
      }
    }
  }
  for (std::size_t f = 0; f < out.faces.size(); ++f) {
    for (auto v : out.faces[f].vertices) out.incident[v].push_back(f);
  }
  for (const auto& inc : out.incident) {
    if (inc.empty()) throw Error("points not in convex position");
  }
  return out;
}

std::vector<HullFace> hull_faces_at(const Configuration& cfg, std::size_t vertex) {
  require_solid(cfg);
  const std::size_t n = cfg.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<HullFace> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (j == vertex || k == vertex) continue;
      if (auto f = supporting_face(cfg, vertex, j, k, seen)) out.push_back(std::move(*f));
    }
  }
  if (out.empty()) throw Error("points not in convex position");
  return out;
}

}  // namespace planeform
