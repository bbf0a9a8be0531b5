#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planeform/geometry.hpp"
#include "planeform/symmetry.hpp"

namespace planeform {

enum class Solid { Tetrahedron, Octahedron, Cube, Dodecahedron, Icosahedron, Icosidodecahedron };

[[nodiscard]] std::string to_string(Solid s);

/// Vertices centred at the origin with circumradius 1.
[[nodiscard]] std::vector<Vec3> solid(Solid s);

/// Two regular k-gons of circumradius 1 at heights ±h/2; the antiprism twists
/// the top one by pi/k. The pyramid has apex height h above its base.
[[nodiscard]] std::vector<Vec3> prism(int k, double h);
[[nodiscard]] std::vector<Vec3> antiprism(int k, double h);
[[nodiscard]] std::vector<Vec3> pyramid(int k, double h);

/// Translate to the SEB centre and scale to SEB radius 1.
[[nodiscard]] std::vector<Vec3> normalize(std::vector<Vec3> points);

/// Congruence (up to similarity) to one of the solids, using the sorted
/// pairwise distance list and equidistance from the centroid.
[[nodiscard]] std::optional<Solid> match_solid(const std::vector<Vec3>& points, double rel_tol = 1e-7);

/// The four solids an orbit of a 3D rotation group can form without letting a
/// rotation group of the same dimension act freely.
[[nodiscard]] bool breaks_polyhedral(Solid s);

[[nodiscard]] Mat3 random_orthogonal(std::mt19937_64& rng, bool allow_improper = true);

/// Random point in the unit ball, away from every axis and mirror of `group`
/// and with trivial stabiliser.
[[nodiscard]] Vec3 generic_point(const std::vector<Mat3>& group, std::mt19937_64& rng);

/// Union of `orbits` free orbits of the canonical realisation of `label`, at
/// distinct random radii.
[[nodiscard]] std::vector<Vec3> random_symmetric(const Label& label, int orbits, std::mt19937_64& rng);

[[nodiscard]] std::vector<Vec3> random_points(int n, std::mt19937_64& rng);

}  // namespace planeform
