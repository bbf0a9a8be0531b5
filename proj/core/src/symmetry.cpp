#include "planeform/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace planeform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-6;
constexpr double kParallelTol = 1e-6;

Vec3 canonical_direction(Vec3 v) {
  v.normalize();
  for (int k = 0; k < 3; ++k) {
    if (std::abs(v[k]) > 1e-9) return v[k] < 0.0 ? Vec3(-v) : v;
  }
  return v;
}

bool parallel(const Vec3& a, const Vec3& b) { return std::abs(a.normalized().dot(b.normalized())) > 1.0 - kParallelTol; }
bool perpendicular(const Vec3& a, const Vec3& b) { return std::abs(a.normalized().dot(b.normalized())) < kParallelTol; }

Vec3 rotation_axis(const Mat3& p, double angle) {
  if (angle < kPi - 1e-4) {
    const Vec3 skew(p(2, 1) - p(1, 2), p(0, 2) - p(2, 0), p(1, 0) - p(0, 1));
    return skew.normalized();
  }
  const Mat3 b = 0.5 * (p + Mat3::Identity());
  Eigen::Index col = 0;
  b.colwise().norm().maxCoeff(&col);
  return b.col(col).normalized();
}

struct Line {
  Vec3 direction;
  int rotations = 0;
  [[nodiscard]] int fold() const { return rotations + 1; }
};

struct Analysis {
  std::vector<Line> lines;
  std::vector<Vec3> mirror_normals;
  std::vector<Vec3> rotoreflection_axes;
  bool inversion = false;
  std::size_t proper = 0;
  std::size_t total = 0;

  [[nodiscard]] int max_fold() const {
    int f = 1;
    for (const auto& l : lines) f = std::max(f, l.fold());
    return f;
  }
  [[nodiscard]] int count_fold_at_least(int f) const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [f](const Line& l) { return l.fold() >= f; }));
  }
  [[nodiscard]] bool mirror_normal_to(const Vec3& axis) const {
    return std::any_of(mirror_normals.begin(), mirror_normals.end(), [&](const Vec3& n) { return parallel(n, axis); });
  }
  [[nodiscard]] bool mirror_containing(const Vec3& axis) const {
    return std::any_of(mirror_normals.begin(), mirror_normals.end(), [&](const Vec3& n) { return perpendicular(n, axis); });
  }
};

Analysis analyse(const std::vector<Mat3>& elements) {
  Analysis a;
  a.total = elements.size();
  for (const auto& m : elements) {
    const ElementKind k = describe(m);
    switch (k.type) {
      case ElementKind::Identity:
        ++a.proper;
        break;
      case ElementKind::Rotation: {
        ++a.proper;
        const Vec3 d = canonical_direction(k.axis);
        auto it = std::find_if(a.lines.begin(), a.lines.end(), [&](const Line& l) { return parallel(l.direction, d); });
        if (it == a.lines.end()) a.lines.push_back(Line{d, 1});
        else ++it->rotations;
        break;
      }
      case ElementKind::Inversion:
        a.inversion = true;
        break;
      case ElementKind::Reflection:
        a.mirror_normals.push_back(canonical_direction(k.axis));
        break;
      case ElementKind::Rotoreflection:
        a.rotoreflection_axes.push_back(canonical_direction(k.axis));
        break;
    }
  }
  return a;
}

Label classify(const Analysis& a) {
  const int n = static_cast<int>(a.total);
  const int proper = static_cast<int>(a.proper);
  if (n == 0) throw Error("empty group");
  if (proper == 1) {
    if (n == 1) return C1();
    if (n == 2 && a.inversion) return Ci();
    if (n == 2 && a.mirror_normals.size() == 1) return Cs();
    throw Error("unrecognised group");
  }
  const bool improper = n == 2 * proper;
  if (!improper && n != proper) throw Error("unrecognised group");

  if (a.count_fold_at_least(3) >= 2) {
    Family f;
    if (proper == 12) f = !improper ? Family::T : (a.inversion ? Family::Th : Family::Td);
    else if (proper == 24) f = improper ? Family::Oh : Family::O;
    else if (proper == 60) f = improper ? Family::Ih : Family::I;
    else throw Error("unrecognised group");
    return simple(f);
  }

  if (a.lines.size() == 1) {
    const int k = a.lines.front().fold();
    if (k != proper) throw Error("unrecognised group");
    if (!improper) return C(k);
    const Vec3& axis = a.lines.front().direction;
    if (a.mirror_normal_to(axis)) return Ch(k);
    if (a.mirror_containing(axis)) return Cv(k);
    return S(2 * k);
  }

  const int l = proper / 2;
  if (static_cast<int>(a.lines.size()) != l + 1 && !(l == 2 && a.lines.size() == 3)) throw Error("unrecognised group");
  if (!improper) return D(l);
  if (l == 2) {
    for (const auto& line : a.lines) {
      if (a.mirror_normal_to(line.direction)) return Dh(2);
    }
    return Dv(2);
  }
  const auto principal = std::find_if(a.lines.begin(), a.lines.end(), [l](const Line& x) { return x.fold() == l; });
  if (principal == a.lines.end()) throw Error("unrecognised group");
  return a.mirror_normal_to(principal->direction) ? Dh(l) : Dv(l);
}

std::vector<double> axis_distances(const Configuration& cfg, const Vec3& center, const Vec3& axis) {
  std::vector<double> d;
  d.reserve(cfg.size());
  for (const auto& p : cfg.points()) {
    const Vec3 q = p - center;
    d.push_back((q - q.dot(axis) * axis).norm());
  }
  std::sort(d.begin(), d.end());
  return d;
}

// -1, 0, +1 comparison of sorted distance lists with tolerance.
int compare_multisets(const std::vector<double>& a, const std::vector<double>& b, double eps) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i] - eps) return -1;
    if (a[i] > b[i] + eps) return 1;
  }
  return 0;
}

bool mirror_occupied(const Configuration& cfg, const Vec3& center, const Vec3& normal) {
  return std::any_of(cfg.points().begin(), cfg.points().end(),
                     [&](const Vec3& p) { return std::abs(normal.dot(p - center)) <= cfg.length_tol(); });
}

std::optional<Vec3> pick_d2_axis(const Analysis& a, const Label& label, const Configuration* cfg, const Vec3& center) {
  if (label.family == Family::Dv) {
    for (const auto& line : a.lines) {
      if (!a.rotoreflection_axes.empty() && parallel(line.direction, a.rotoreflection_axes.front())) return line.direction;
    }
  }
  std::vector<const Line*> pool;
  for (const auto& line : a.lines) pool.push_back(&line);
  if (cfg == nullptr) return pool.front()->direction;
  if (label.family == Family::Dh) {
    std::vector<const Line*> occupied;
    for (const auto* line : pool) {
      if (mirror_occupied(*cfg, center, line->direction)) occupied.push_back(line);
    }
    if (!occupied.empty()) pool = occupied;
  }
  const Line* best = pool.front();
  auto best_d = axis_distances(*cfg, center, best->direction);
  for (const auto* line : pool) {
    auto d = axis_distances(*cfg, center, line->direction);
    if (compare_multisets(d, best_d, cfg->length_tol()) < 0) {
      best = line;
      best_d = std::move(d);
    }
  }
  return best->direction;
}

double snap_angle(double angle, std::size_t max_denominator) {
  double best = angle;
  double best_err = 1e-7;
  for (std::size_t q = 1; q <= max_denominator; ++q) {
    const double step = 2.0 * kPi / static_cast<double>(q);
    const double cand = std::round(angle / step) * step;
    if (std::abs(cand - angle) < best_err) {
      best_err = std::abs(cand - angle);
      best = cand;
    }
  }
  return best;
}

Mat3 snap(const Mat3& m, std::size_t max_denominator) {
  const double sign = m.determinant() > 0.0 ? 1.0 : -1.0;
  const Mat3 p = sign * m;
  const double angle = std::acos(std::clamp((p.trace() - 1.0) / 2.0, -1.0, 1.0));
  if (angle < kAngleTol) return sign * Mat3::Identity();
  const Vec3 axis = rotation_axis(p, angle);
  return sign * rotation(axis, snap_angle(angle, max_denominator));
}

Mat3 nearest_orthogonal(const Mat3& m, double det_sign) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() * det_sign < 0.0) d(2, 2) = -1.0;
  return svd.matrixU() * d * svd.matrixV().transpose();
}

void sort_elements(std::vector<Mat3>& elements) {
  using Key = std::pair<std::array<double, 11>, std::size_t>;
  std::vector<Key> keys;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Key k{{}, i};
    k.first[0] = same_matrix(elements[i], Mat3::Identity()) ? 0 : 1;
    k.first[1] = elements[i].determinant() > 0.0 ? 0 : 1;
    for (int e = 0; e < 9; ++e) k.first[static_cast<std::size_t>(e) + 2] = std::round(elements[i].data()[e] * 1e6);
    keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Mat3> sorted;
  sorted.reserve(elements.size());
  for (const auto& k : keys) sorted.push_back(elements[k.second]);
  elements = std::move(sorted);
}

}  // namespace

ElementKind describe(const Mat3& m) {
  ElementKind k;
  const bool proper = m.determinant() > 0.0;
  const Mat3 p = proper ? m : Mat3(-m);
  k.angle = std::acos(std::clamp((p.trace() - 1.0) / 2.0, -1.0, 1.0));
  if (k.angle < kAngleTol) {
    k.type = proper ? ElementKind::Identity : ElementKind::Inversion;
    k.angle = 0.0;
    return k;
  }
  k.axis = rotation_axis(p, k.angle);
  if (proper) k.type = ElementKind::Rotation;
  else if (k.angle > kPi - kAngleTol) k.type = ElementKind::Reflection;
  else k.type = ElementKind::Rotoreflection;
  return k;
}

std::optional<std::size_t> PointGroup::find(const Mat3& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (same_matrix(elements[i], m)) return i;
  }
  return std::nullopt;
}

Label classify(const std::vector<Mat3>& elements) {
  if (!is_closed(elements)) throw Error("unrecognised group");
  return classify(analyse(elements));
}

PointGroup make_group(std::vector<Mat3> elements, const Vec3& center, const Configuration* cfg) {
  PointGroup g;
  sort_elements(elements);
  g.elements = std::move(elements);
  g.center = center;
  const Analysis a = analyse(g.elements);
  g.label = classify(a);
  g.inversion = a.inversion;
  for (const auto& n : a.mirror_normals) g.mirrors.push_back(Plane::through(center, n).canonical());
  for (const auto& l : a.lines) g.axes.push_back(Axis{l.direction, l.fold()});

  switch (g.label.family) {
    case Family::C:
    case Family::Ch:
    case Family::Cv:
    case Family::S:
      g.principal_axis = a.lines.front().direction;
      break;
    case Family::D:
    case Family::Dh:
    case Family::Dv:
      if (g.label.param == 2) {
        g.principal_axis = pick_d2_axis(a, g.label, cfg, center);
      } else {
        for (const auto& l : a.lines) {
          if (l.fold() == g.label.param) g.principal_axis = l.direction;
        }
      }
      break;
    default:
      break;
  }
  if (g.principal_axis) {
    for (const auto& n : a.mirror_normals) {
      if (parallel(n, *g.principal_axis)) g.horizontal_mirror = Plane::through(center, *g.principal_axis);
    }
  }
  if (g.horizontal_mirror) g.horizontal = HorizontalPlane::Mirror;
  else if (g.label.family == Family::S) g.horizontal = HorizontalPlane::Rotoreflection;
  return g;
}

PointGroup detect_symmetries(const Configuration& cfg) {
  if (cfg.empty()) throw Error("empty configuration");
  if (!cfg.distinct()) throw Error("multiplicity");
  const Ball ball = seb(cfg);
  const Vec3 c = ball.center;
  const double eps = cfg.length_tol();
  const std::size_t n = cfg.size();

  std::vector<Vec3> q(n);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = cfg[i] - c;
    r[i] = q[i].norm();
  }

  std::optional<std::size_t> ia;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] > eps && (!ia || r[i] < r[*ia] - eps)) ia = i;
  }
  if (!ia) throw Error("continuous symmetry");
  const Vec3 a = q[*ia];
  std::optional<std::size_t> ib;
  double best_sin = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] <= eps) continue;
    const double s = a.cross(q[i]).norm() / (r[*ia] * r[i]);
    if (s > best_sin + 1e-12) {
      best_sin = s;
      ib = i;
    }
  }
  if (!ib || best_sin * r[*ib] <= eps) throw Error("continuous symmetry");
  const Vec3 b = q[*ib];

  Mat3 src;
  src << a, b, a.cross(b);
  const Mat3 src_inv = src.inverse();
  const double dot_ab = a.dot(b);
  const double dot_tol = 2.0 * eps * (ball.radius + 1e-300);
  const double coarse = 4.0 * eps * (1.0 + ball.radius / r[*ia]) * (1.0 + 1.0 / best_sin);

  // Points sorted by x for window lookups.
  std::vector<std::size_t> by_x(n);
  for (std::size_t i = 0; i < n; ++i) by_x[i] = i;
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t x, std::size_t y) { return q[x].x() < q[y].x(); });
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = q[by_x[i]].x();
  auto lookup = [&](const Vec3& t, double radius) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    double best_d = radius;
    for (auto it = std::lower_bound(xs.begin(), xs.end(), t.x() - radius); it != xs.end() && *it <= t.x() + radius; ++it) {
      const std::size_t j = by_x[static_cast<std::size_t>(it - xs.begin())];
      const double d = (q[j] - t).norm();
      if (d <= best_d) best_d = d, best = j;
    }
    return best;
  };

  std::vector<Mat3> found;
  auto accept = [&](Mat3 m, double det_sign) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = lookup(m * q[i], coarse);
      if (!j) return;
      image[i] = *j;
    }
    Mat3 h = Mat3::Zero();
    for (std::size_t i = 0; i < n; ++i) h += q[image[i]] * q[i].transpose();
    m = nearest_orthogonal(h, det_sign);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = lookup(m * q[i], eps);
      if (!j || hit[*j]) return;
      hit[*j] = true;
    }
    found.push_back(m);  // (i, j) fixes the images of a and b, so no duplicates arise
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(r[i] - r[*ia]) > eps) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || std::abs(r[j] - r[*ib]) > eps) continue;
      if (std::abs(q[i].dot(q[j]) - dot_ab) > dot_tol) continue;
      for (double sign : {1.0, -1.0}) {
        Mat3 dst;
        dst << q[i], q[j], sign * q[i].cross(q[j]);
        const Mat3 m = dst * src_inv;
        if (!is_orthogonal(m, 1e-3)) continue;
        accept(nearest_orthogonal(m, sign), sign);
      }
    }
  }

  for (auto& m : found) m = snap(m, 2 * n);
  if (!is_closed(found)) throw Error("inconsistent tolerance");
  return make_group(std::move(found), c, &cfg);
}

PointGroup rotation_group(const PointGroup& group) {
  std::vector<Mat3> proper;
  for (const auto& m : group.elements) {
    if (m.determinant() > 0.0) proper.push_back(m);
  }
  PointGroup g = make_group(std::move(proper), group.center);
  if (g.label.family == Family::D && g.label.param == 2 && group.principal_axis) {
    for (const auto& ax : g.axes) {
      if (parallel(ax.direction, *group.principal_axis)) g.principal_axis = ax.direction;
    }
  }
  return g;
}

bool is_subgroup(const PointGroup& sub, const PointGroup& super) {
  const double scale = 1.0 + sub.center.norm() + super.center.norm();
  if ((sub.center - super.center).norm() > 1e-9 * scale) throw Error("mismatched fixed points");
  return std::all_of(sub.elements.begin(), sub.elements.end(), [&](const Mat3& m) { return super.find(m).has_value(); });
}

bool has_horizontal_mirror(const PointGroup& group) { return group.horizontal_mirror.has_value(); }

GroupMetadata metadata(const PointGroup& group) {
  GroupMetadata md;
  md.order = static_cast<int>(group.order());
  if (group.label.family == Family::S) {
    md.principal_fold = group.label.param;
  } else if (group.principal_axis) {
    for (const auto& ax : group.axes) {
      if (parallel(ax.direction, *group.principal_axis)) md.principal_fold = ax.fold;
    }
  }
  if (group.principal_axis) {
    for (const auto& ax : group.axes) {
      if (perpendicular(ax.direction, *group.principal_axis) && ax.fold == 2) ++md.other_twofold;
    }
  }
  md.horizontal = group.horizontal != HorizontalPlane::None;
  for (const auto& ax : group.axes) {
    if (ax.fold == 2) ++md.axes2;
    if (ax.fold == 3) ++md.axes3;
    if (ax.fold == 4) ++md.axes4;
    if (ax.fold == 5) ++md.axes5;
  }
  md.mirrors = static_cast<int>(group.mirrors.size());
  return md;
}

}  // namespace planeform
