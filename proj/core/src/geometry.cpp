#include "planeform/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

namespace planeform {

Configuration::Configuration(std::vector<Vec3> points, double tol) : points_(std::move(points)), tol_(tol) {
  if (!(tol_ > 0.0) || !std::isfinite(tol_)) throw Error("tolerance must be positive");
  for (const auto& p : points_) {
    if (!p.allFinite()) throw Error("non-finite coordinate");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      diameter_ = std::max(diameter_, (points_[i] - points_[j]).norm());
    }
  }
}

double Configuration::length_tol() const {
  double scale = diameter_;
  if (scale <= 0.0) {
    for (const auto& p : points_) scale = std::max(scale, p.norm());
  }
  if (scale <= 0.0) scale = 1.0;
  return tol_ * scale;
}

double Configuration::min_separation() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      best = std::min(best, (points_[i] - points_[j]).norm());
    }
  }
  return best;
}

bool Configuration::distinct() const { return min_separation() > length_tol(); }

std::size_t Configuration::nearest(const Vec3& p) const {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double d = (points_[i] - p).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::optional<std::size_t> Configuration::find(const Vec3& p) const {
  if (points_.empty()) return std::nullopt;
  const std::size_t i = nearest(p);
  if ((points_[i] - p).norm() <= length_tol()) return i;
  return std::nullopt;
}

Plane Plane::through(const Vec3& point, const Vec3& normal) {
  const Vec3 n = normal.normalized();
  return Plane{n, n.dot(point)};
}

Plane Plane::canonical() const {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(normal[k]) > 1e-12) {
      if (normal[k] < 0.0) return Plane{-normal, -offset};
      return *this;
    }
  }
  return *this;
}

Vec3 apply(const OrthoMap& map, const Vec3& p) { return map(p); }

Vec3 project_to_plane(const Vec3& p, const Plane& plane) { return p - plane.signed_distance(p) * plane.normal; }

bool is_orthogonal(const Mat3& m, double tol) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(std::abs(m.determinant()) - 1.0) <= tol;
}

bool same_matrix(const Mat3& a, const Mat3& b, double tol) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

Mat3 rotation(const Vec3& axis, double angle) { return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(); }

Mat3 reflection(const Vec3& normal) {
  const Vec3 n = normal.normalized();
  return Mat3::Identity() - 2.0 * n * n.transpose();
}

Vec3 any_orthogonal(const Vec3& v) {
  const Vec3 a = v.normalized();
  Eigen::Index k = 0;
  a.cwiseAbs().minCoeff(&k);
  Vec3 e = Vec3::Zero();
  e[k] = 1.0;
  return (e - a.dot(e) * a).normalized();
}

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  if (a.y() != b.y()) return a.y() < b.y();
  return a.z() < b.z();
}

// Smallest enclosing ball ------------------------------------------------------

namespace {

bool encloses(const Ball& b, const Vec3& p, double eps) { return b.radius >= 0.0 && (p - b.center).norm() <= b.radius + eps; }

std::optional<Ball> circumball(std::span<const Vec3> s) {
  switch (s.size()) {
    case 0:
      return Ball{Vec3::Zero(), -1.0};
    case 1:
      return Ball{s[0], 0.0};
    case 2:
      return Ball{0.5 * (s[0] + s[1]), 0.5 * (s[0] - s[1]).norm()};
    case 3: {
      const Vec3 a = s[1] - s[0];
      const Vec3 b = s[2] - s[0];
      const Vec3 axb = a.cross(b);
      const double denom = 2.0 * axb.squaredNorm();
      if (denom <= 1e-24 * a.squaredNorm() * b.squaredNorm()) return std::nullopt;
      const Vec3 c = (b.squaredNorm() * axb.cross(a) + a.squaredNorm() * b.cross(axb)) / denom;
      return Ball{s[0] + c, c.norm()};
    }
    case 4: {
      Mat3 m;
      Vec3 rhs;
      for (int i = 0; i < 3; ++i) {
        const Vec3 d = s[i + 1] - s[0];
        m.row(i) = 2.0 * d.transpose();
        rhs[i] = d.squaredNorm();
      }
      Eigen::FullPivLU<Mat3> lu(m);
      if (lu.rank() < 3) return std::nullopt;
      const Vec3 c = lu.solve(rhs);
      return Ball{s[0] + c, c.norm()};
    }
    default:
      return std::nullopt;
  }
}

// Minimum ball through a support set that may be degenerate: the smallest
// circumball of a subset that still encloses every support point.
Ball support_ball(std::span<const Vec3> s, double eps) {
  if (auto b = circumball(s)) return *b;
  Ball best{Vec3::Zero(), std::numeric_limits<double>::infinity()};
  const std::size_t n = s.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vec3> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(s[i]);
    }
    if (sub.size() == n) continue;
    auto b = circumball(sub);
    if (!b) continue;
    bool ok = true;
    for (const auto& p : s) ok = ok && encloses(*b, p, eps);
    if (ok && b->radius < best.radius) best = *b;
  }
  return best;
}

Ball move_to_front(std::vector<Vec3>& pts, std::size_t end, std::vector<Vec3>& support, double eps) {
  Ball ball = support_ball(support, eps);
  if (support.size() == 4) return ball;
  for (std::size_t i = 0; i < end; ++i) {
    if (encloses(ball, pts[i], eps)) continue;
    support.push_back(pts[i]);
    ball = move_to_front(pts, i, support, eps);
    support.pop_back();
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(i), pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  return ball;
}

std::uint64_t point_hash(const Vec3& p) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int k = 0; k < 3; ++k) {
    h ^= std::bit_cast<std::uint64_t>(p[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Ball seb(const Configuration& cfg) {
  if (cfg.empty()) throw Error("empty configuration");
  std::vector<Vec3> pts = cfg.points();
  std::uint64_t seed = 0;
  for (const auto& p : pts) seed += point_hash(p);
  std::sort(pts.begin(), pts.end(), lex_less);
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Vec3> support;
  const double eps = 0.1 * cfg.length_tol();
  Ball b = move_to_front(pts, pts.size(), support, eps);
  b.radius = 0.0;
  for (const auto& p : cfg.points()) b.radius = std::max(b.radius, (p - b.center).norm());
  return b;
}

Ball innermost_empty_ball(const Configuration& cfg, const Ball& enclosing) {
  Ball inner{enclosing.center, std::numeric_limits<double>::infinity()};
  for (const auto& p : cfg.points()) inner.radius = std::min(inner.radius, (p - enclosing.center).norm());
  return inner;
}

Ball innermost_empty_ball(const Configuration& cfg) { return innermost_empty_ball(cfg, seb(cfg)); }

std::optional<Plane> coplanar(const Configuration& cfg) {
  if (cfg.empty()) return std::nullopt;
  const std::size_t n = cfg.size();
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : cfg.points()) centroid += p;
  centroid /= static_cast<double>(n);
  Mat3 cov = Mat3::Zero();
  for (const auto& p : cfg.points()) {
    const Vec3 d = p - centroid;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
  Vec3 normal = eig.eigenvectors().col(0);
  if (!normal.allFinite() || normal.norm() < 0.5) normal = Vec3::UnitZ();
  const Plane plane = Plane::through(centroid, normal).canonical();
  for (const auto& p : cfg.points()) {
    if (std::abs(plane.signed_distance(p)) > cfg.length_tol()) return std::nullopt;
  }
  return plane;
}

}  // namespace planeform
