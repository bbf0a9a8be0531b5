#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {
inline void PrintTo(const Label& l, std::ostream* os) { *os << l.str(); }
}  // namespace planeform

namespace planeform::testing {

inline std::vector<Vec3> cube_vertices(double half = 1.0) {
  std::vector<Vec3> out;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) out.emplace_back(half * x, half * y, half * z);
  return out;
}

inline std::vector<Vec3> octahedron_vertices(double r = 1.0) {
  return {Vec3(r, 0, 0), Vec3(-r, 0, 0), Vec3(0, r, 0), Vec3(0, -r, 0), Vec3(0, 0, r), Vec3(0, 0, -r)};
}

inline std::vector<Vec3> regular_polygon(int k, double r, double z = 0.0, double phase = 0.0) {
  std::vector<Vec3> out;
  for (int i = 0; i < k; ++i) {
    const double t = phase + 2.0 * std::numbers::pi * i / k;
    out.emplace_back(r * std::cos(t), r * std::sin(t), z);
  }
  return out;
}

inline std::vector<Vec3> concat(std::vector<Vec3> a, const std::vector<Vec3>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Vec3> transformed(const std::vector<Vec3>& pts, const Mat3& m, const Vec3& t, double s) {
  std::vector<Vec3> out;
  for (const auto& p : pts) out.push_back(s * (m * p) + t);
  return out;
}

inline bool contains_label(const std::vector<Label>& v, const Label& l) {
  return std::find(v.begin(), v.end(), l) != v.end();
}

inline std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace planeform::testing
