#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planeform/geometry.hpp"

namespace planeform {

enum class Family : std::uint8_t { C1, Ci, Cs, C, Ch, Cv, D, Dh, Dv, S, T, Td, Th, O, Oh, I, Ih };

/// Schoenflies label. `param` is k for C/Ch/Cv, l for D/Dh/Dv, m for S and 0
/// otherwise. Dv is the antiprism group usually written Dd.
struct Label {
  Family family = Family::C1;
  int param = 0;

  [[nodiscard]] int order() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] bool polyhedral() const;
  [[nodiscard]] bool rotation_only() const;

  static Label parse(const std::string& text);

  auto operator<=>(const Label&) const = default;
};

Label C(int k);
Label Ch(int k);
Label Cv(int k);
Label D(int l);
Label Dh(int l);
Label Dv(int l);
Label S(int m);
Label Cs();
Label Ci();
Label C1();
Label simple(Family f);

struct Axis {
  Vec3 direction;  // canonical sign
  int fold = 1;    // maximal rotation order about this line
};

enum class HorizontalPlane : std::uint8_t { None, Mirror, Rotoreflection };

/// Finite group of orthogonal maps about `center`.
struct PointGroup {
  std::vector<Mat3> elements;  // identity first
  Vec3 center = Vec3::Zero();
  Label label;
  std::optional<Vec3> principal_axis;
  std::optional<Plane> horizontal_mirror;  // only a genuine reflection
  std::vector<Plane> mirrors;
  std::vector<Axis> axes;
  bool inversion = false;
  HorizontalPlane horizontal = HorizontalPlane::None;

  [[nodiscard]] std::size_t order() const { return elements.size(); }
  [[nodiscard]] OrthoMap map(std::size_t i) const { return OrthoMap{elements[i], center}; }
  /// Index of the element equal to m, if present.
  [[nodiscard]] std::optional<std::size_t> find(const Mat3& m) const;
};

/// Geometric description of a single orthogonal matrix.
struct ElementKind {
  enum Type : std::uint8_t { Identity, Rotation, Inversion, Reflection, Rotoreflection } type = Identity;
  Vec3 axis = Vec3::UnitZ();  // rotation axis, or mirror normal for reflections
  double angle = 0.0;         // of the proper part (m or -m), in [0, pi]
};

[[nodiscard]] ElementKind describe(const Mat3& m);

/// Full symmetry group of the configuration about its SEB centre.
[[nodiscard]] PointGroup detect_symmetries(const Configuration& cfg);

[[nodiscard]] Label classify(const std::vector<Mat3>& elements);

/// Group with label and arrangement metadata filled in. `cfg`, when given, is
/// used to pick the principal axis of the D2 families.
[[nodiscard]] PointGroup make_group(std::vector<Mat3> elements, const Vec3& center,
                                    const Configuration* cfg = nullptr);

[[nodiscard]] PointGroup rotation_group(const PointGroup& group);

/// Element-level containment: every element of `sub` lies in `super`.
[[nodiscard]] bool is_subgroup(const PointGroup& sub, const PointGroup& super);
/// Label-level embedding relation sub ≼ super.
[[nodiscard]] bool is_subgroup(const Label& sub, const Label& super);

[[nodiscard]] bool has_horizontal_mirror(const PointGroup& group);

/// Closure of a generator set under multiplication.
[[nodiscard]] std::vector<Mat3> closure(const std::vector<Mat3>& generators, std::size_t limit = 240);

/// True when the identity is present and every product lies in the set.
[[nodiscard]] bool is_closed(const std::vector<Mat3>& elements);

/// A standard matrix realisation of the label with principal axis z.
[[nodiscard]] std::vector<Mat3> canonical_group(const Label& label);

/// Summary columns of the reference tables of the seventeen families.
struct GroupMetadata {
  int order = 0;
  int principal_fold = 0;   // rotoreflection order for S
  int other_twofold = 0;    // 2-fold axes perpendicular to the principal one
  bool horizontal = false;  // mirror or rotoreflection plane
  int axes2 = 0, axes3 = 0, axes4 = 0, axes5 = 0;
  int mirrors = 0;

  auto operator<=>(const GroupMetadata&) const = default;
};

[[nodiscard]] GroupMetadata metadata(const PointGroup& group);

/// Multiplication table over a fixed element list.
class GroupTable {
 public:
  explicit GroupTable(const std::vector<Mat3>& elements);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  [[nodiscard]] std::size_t identity() const { return identity_; }

  /// Indices of the subgroup generated by the given element indices.
  [[nodiscard]] std::vector<bool> generate(const std::vector<bool>& seed) const;

 private:
  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
};

/// Every subgroup of the tabled group, as membership masks. Built by joining
/// known subgroups with single elements until no new subgroup appears;
/// `allowed`, when non-empty, restricts the join to those elements.
[[nodiscard]] std::vector<std::vector<bool>> subgroup_masks(const GroupTable& table,
                                                            const std::vector<bool>& allowed = {});

}  // namespace planeform
