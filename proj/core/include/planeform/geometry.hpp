#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace planeform {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Library-wide error. The message carries the contract name of the failure
/// ("empty configuration", "unsolvable structure", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Entry-wise tolerance used when comparing orthogonal matrices. Distinct
/// elements of any finite point group handled here differ by far more.
inline constexpr double kMatrixTolerance = 1e-6;

/// A finite list of robot positions together with the relative tolerance that
/// every geometric predicate on it uses. Indices are bookkeeping only.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Vec3> points, double tol = kDefaultTolerance);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] const Vec3& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] const std::vector<Vec3>& points() const { return points_; }
  [[nodiscard]] double tol() const { return tol_; }
  [[nodiscard]] double diameter() const { return diameter_; }

  /// Absolute length tolerance: tol * diameter (never zero).
  [[nodiscard]] double length_tol() const;

  /// Smallest distance between two entries (infinity for n < 2).
  [[nodiscard]] double min_separation() const;

  /// True when no two points coincide within length_tol().
  [[nodiscard]] bool distinct() const;

  /// Index of the point nearest to p.
  [[nodiscard]] std::size_t nearest(const Vec3& p) const;

  /// Index of a point within length_tol() of p, if any.
  [[nodiscard]] std::optional<std::size_t> find(const Vec3& p) const;

 private:
  std::vector<Vec3> points_;
  double tol_ = kDefaultTolerance;
  double diameter_ = 0.0;
};

struct Ball {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

/// Oriented plane {x : normal . x = offset} with a unit normal.
struct Plane {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;

  static Plane through(const Vec3& point, const Vec3& normal);

  [[nodiscard]] double signed_distance(const Vec3& p) const { return normal.dot(p) - offset; }

  /// Same plane with the normal flipped so its first non-negligible
  /// component is positive.
  [[nodiscard]] Plane canonical() const;
};

/// Orthogonal linear map acting about a fixed point.
struct OrthoMap {
  Mat3 linear = Mat3::Identity();
  Vec3 fixed_point = Vec3::Zero();

  [[nodiscard]] Vec3 operator()(const Vec3& p) const { return fixed_point + linear * (p - fixed_point); }
  [[nodiscard]] bool proper() const { return linear.determinant() > 0.0; }
};

[[nodiscard]] Vec3 apply(const OrthoMap& map, const Vec3& p);
[[nodiscard]] Vec3 project_to_plane(const Vec3& p, const Plane& plane);

[[nodiscard]] bool is_orthogonal(const Mat3& m, double tol = kMatrixTolerance);
[[nodiscard]] bool same_matrix(const Mat3& a, const Mat3& b, double tol = kMatrixTolerance);

/// Smallest enclosing ball (randomized move-to-front over support sets of at
/// most four points; the shuffle is seeded from an order-independent hash).
[[nodiscard]] Ball seb(const Configuration& cfg);

/// Ball centred at the SEB centre whose sphere passes through the nearest point.
[[nodiscard]] Ball innermost_empty_ball(const Configuration& cfg);
[[nodiscard]] Ball innermost_empty_ball(const Configuration& cfg, const Ball& enclosing);

/// Best-fit plane when every point lies within tol * diameter of it.
[[nodiscard]] std::optional<Plane> coplanar(const Configuration& cfg);

/// Rotation by `angle` about the unit vector `axis`.
[[nodiscard]] Mat3 rotation(const Vec3& axis, double angle);
/// Reflection through the plane through the origin with unit normal `normal`.
[[nodiscard]] Mat3 reflection(const Vec3& normal);

/// Unit vector orthogonal to v (deterministic in v's coordinates).
[[nodiscard]] Vec3 any_orthogonal(const Vec3& v);

/// Lexicographic comparison of coordinates; used for own-frame tie-breaks.
[[nodiscard]] bool lex_less(const Vec3& a, const Vec3& b);

// Convex hull faces -----------------------------------------------------------

struct HullFace {
  std::vector<std::size_t> vertices;  // cyclic order
  Vec3 centroid = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();        // outward
};

struct HullAdjacency {
  std::vector<HullFace> faces;
  /// incident[i] lists indices into `faces` of the faces containing point i.
  std::vector<std::vector<std::size_t>> incident;
};

/// Faces of the convex hull with coplanar facets merged into polygons.
/// Requires n >= 4, a non-coplanar input, and every point a strict hull vertex.
[[nodiscard]] HullAdjacency hull_face_adjacency(const Configuration& cfg);

/// The hull faces containing one vertex, with the same requirements.
[[nodiscard]] std::vector<HullFace> hull_faces_at(const Configuration& cfg, std::size_t vertex);

}  // namespace planeform
