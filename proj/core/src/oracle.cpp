#include "planeform/oracle.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "planeform/symmetricity.hpp"
#include "planeform/symmetry.hpp"

namespace planeform::oracle {

namespace {

bool close(const Mat3& a, const Mat3& b) { return (a - b).cwiseAbs().maxCoeff() <= 1e-6; }

std::size_t index_of(const std::vector<Mat3>& list, const Mat3& m) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (close(list[i], m)) return i;
  }
  return list.size();
}

double spread(const std::vector<Vec3>& pts) {
  double d = 0.0;
  for (const auto& p : pts) {
    for (const auto& q : pts) d = std::max(d, (p - q).norm());
  }
  return d;
}

bool has_point(const std::vector<Vec3>& pts, const Vec3& x, double eps) {
  return std::any_of(pts.begin(), pts.end(), [&](const Vec3& p) { return (p - x).norm() <= eps; });
}

Mat3 orthogonalize(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

std::vector<Mat3> oracle_group(const std::vector<Vec3>& points, double tol) {
  const std::size_t n = points.size();
  if (n < 2) throw Error("need at least two points");
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(n);
  std::vector<Vec3> v;
  for (const auto& p : points) v.push_back(p - centroid);

  const double diam = spread(points);
  const double eps = tol * diam;
  const double loose = 1e-6 * diam;

  // Anchors: longest vector, then the most orthogonal one, then the one
  // spanning the largest volume (may be absent for planar sets through the centroid).
  std::size_t a = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i].norm() > v[a].norm()) a = i;
  }
  std::size_t b = n;
  double best = loose * diam;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = v[a].cross(v[i]).norm();
    if (c > best) best = c, b = i;
  }
  if (b == n) throw Error("continuous symmetry");
  std::size_t c = n;
  best = loose * diam * diam;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(v[a].cross(v[b]).dot(v[i]));
    if (d > best) best = d, c = i;
  }

  auto matches = [&](std::size_t i, std::size_t j) { return std::abs(v[i].norm() - v[j].norm()) <= loose; };
  auto dot_matches = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return std::abs(v[i].dot(v[j]) - v[k].dot(v[l])) <= loose * diam;
  };

  std::vector<Mat3> out;
  auto consider = [&](const Mat3& raw) {
    const Mat3 m = orthogonalize(raw);
    if ((m - raw).cwiseAbs().maxCoeff() > 1e-5) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (!has_point(v, m * v[i], eps)) return;
    }
    if (index_of(out, m) == out.size()) out.push_back(m);
  };

  for (std::size_t a2 = 0; a2 < n; ++a2) {
    if (!matches(a, a2)) continue;
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      if (b2 == a2 || !matches(b, b2) || !dot_matches(a, b, a2, b2)) continue;
      if (c == n) {
        Mat3 src;
        src << v[a], v[b], v[a].cross(v[b]);
        const Mat3 inv = src.inverse();
        for (double sign : {1.0, -1.0}) {
          Mat3 dst;
          dst << v[a2], v[b2], sign * v[a2].cross(v[b2]);
          consider(dst * inv);
        }
        continue;
      }
      Mat3 src;
      src << v[a], v[b], v[c];
      const Mat3 inv = src.inverse();
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (!matches(c, c2) || !dot_matches(a, c, a2, c2) || !dot_matches(b, c, b2, c2)) continue;
        Mat3 dst;
        dst << v[a2], v[b2], v[c2];
        consider(dst * inv);
      }
    }
  }

  for (const auto& x : out) {
    for (const auto& y : out) {
      if (index_of(out, x * y) == out.size()) throw Error("oracle group not closed");
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> oracle_subgroups(const std::vector<Mat3>& elements) {
  const std::size_t g = elements.size();
  if (g > 48) throw Error("use generator enumeration");
  std::vector<std::vector<std::size_t>> mul(g, std::vector<std::size_t>(g));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      mul[i][j] = index_of(elements, elements[i] * elements[j]);
      if (mul[i][j] == g) throw Error("elements do not form a group");
    }
  }
  const std::size_t id = index_of(elements, Mat3::Identity());
  if (id == g) throw Error("elements do not form a group");

  auto closure = [&](std::vector<std::size_t> gens) {
    std::vector<bool> in(g, false);
    std::vector<std::size_t> members{id};
    in[id] = true;
    for (auto x : gens) {
      if (!in[x]) in[x] = true, members.push_back(x);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto p : {mul[members[i]][members[j]], mul[members[j]][members[i]]}) {
          if (!in[p]) in[p] = true, members.push_back(p);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<std::vector<std::size_t>> found;
  found.insert({id});
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) {
      for (std::size_t k = j; k < g; ++k) found.insert(closure({i, j, k}));
    }
  }
  return {found.begin(), found.end()};
}

bool oracle_free_orbits(const std::vector<Vec3>& points, const Vec3& center, const std::vector<Mat3>& subgroup,
                        double tol) {
  const double eps = tol * spread(points);
  std::vector<bool> seen(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Vec3> orbit;
    for (const auto& m : subgroup) {
      const Vec3 q = center + m * (points[i] - center);
      if (!has_point(orbit, q, eps)) orbit.push_back(q);
      for (std::size_t j = 0; j < points.size(); ++j) {
        if ((points[j] - q).norm() <= eps) seen[j] = true;
      }
    }
    if (orbit.size() != subgroup.size()) return false;
  }
  return true;
}

OracleBall oracle_seb(const std::vector<Vec3>& points, double tol) {
  const std::size_t n = points.size();
  if (n == 0) throw Error("empty configuration");
  const double eps = tol * std::max(spread(points), 1.0);
  OracleBall best{points[0], std::numeric_limits<double>::infinity()};
  auto offer = [&](const Vec3& c) {
    double r = 0.0;
    for (const auto& p : points) r = std::max(r, (p - c).norm());
    if (r < best.radius - eps) best = {c, r};
  };
  if (n == 1) return {points[0], 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      offer(0.5 * (points[i] + points[j]));
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec3 ab = points[j] - points[i];
        const Vec3 ac = points[k] - points[i];
        const Vec3 nrm = ab.cross(ac);
        if (nrm.squaredNorm() <= eps * eps) continue;
        const Vec3 cc = points[i] + (ac.squaredNorm() * nrm.cross(ab) + ab.squaredNorm() * ac.cross(nrm)) /
                                        (2.0 * nrm.squaredNorm());
        offer(cc);
        for (std::size_t l = k + 1; l < n; ++l) {
          Mat3 m;
          m.row(0) = 2.0 * (points[j] - points[i]);
          m.row(1) = 2.0 * (points[k] - points[i]);
          m.row(2) = 2.0 * (points[l] - points[i]);
          if (std::abs(m.determinant()) <= eps) continue;
          const Vec3 rhs(points[j].squaredNorm() - points[i].squaredNorm(),
                         points[k].squaredNorm() - points[i].squaredNorm(),
                         points[l].squaredNorm() - points[i].squaredNorm());
          offer(m.colPivHouseholderQr().solve(rhs));
        }
      }
    }
  }
  return best;
}

Comparison compare(const std::vector<Vec3>& points, double tol) {
  if (points.size() > 60) throw Error("oracle comparison limited to 60 points");
  Comparison out;
  const Configuration cfg(points, tol);
  const PointGroup theta = detect_symmetries(cfg);
  const std::vector<Mat3> ref = oracle_group(points, tol);
  out.library_order = theta.order();
  out.oracle_order = ref.size();
  out.group_match = theta.order() == ref.size();
  for (const auto& m : theta.elements) out.group_match = out.group_match && index_of(ref, m) < ref.size();
  if (!out.group_match) {
    out.detail = "group orders " + std::to_string(out.library_order) + " vs " + std::to_string(out.oracle_order);
    return out;
  }

  const Symmetricity rho = symmetricity(cfg, theta);
  for (const auto& l : rho.all) out.library_labels.push_back(l.str());
  if (ref.size() > 48) {
    out.detail = "subgroup comparison skipped (order " + std::to_string(ref.size()) + ")";
    return out;
  }
  out.subgroups_checked = true;

  std::set<std::vector<std::size_t>> lib_free;
  for (const auto& sub : enumerate_subgroups(theta)) {
    if (!acts_freely(cfg, theta.center, sub)) continue;
    std::vector<std::size_t> idx;
    for (const auto& m : sub) idx.push_back(index_of(ref, m));
    std::sort(idx.begin(), idx.end());
    lib_free.insert(idx);
  }

  Vec3 centroid = Vec3::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  std::set<std::vector<std::size_t>> ref_free;
  std::set<std::string> labels;
  for (const auto& sub : oracle_subgroups(ref)) {
    std::vector<Mat3> mats;
    for (auto i : sub) mats.push_back(ref[i]);
    if (!oracle_free_orbits(points, centroid, mats, tol)) continue;
    ref_free.insert(sub);
    labels.insert(classify(mats).str());
  }
  out.library_free = lib_free.size();
  out.oracle_free = ref_free.size();
  out.free_subgroups_match = lib_free == ref_free;
  out.oracle_labels.assign(labels.begin(), labels.end());
  std::set<std::string> lib_labels(out.library_labels.begin(), out.library_labels.end());
  out.labels_match = lib_labels == labels;
  if (!out.free_subgroups_match) {
    out.detail = "free subgroups " + std::to_string(out.library_free) + " vs " + std::to_string(out.oracle_free);
  } else if (!out.labels_match) {
    out.detail = "symmetricity labels differ";
  }
  return out;
}

}  // namespace planeform::oracle
