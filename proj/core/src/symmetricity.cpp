#include "planeform/symmetricity.hpp"

#include <algorithm>

namespace planeform {

namespace {

std::vector<Mat3> pick(const std::vector<Mat3>& elements, const std::vector<bool>& mask) {
  std::vector<Mat3> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (mask[i]) out.push_back(elements[i]);
  }
  return out;
}

bool element_free(const Configuration& cfg, const Vec3& center, const Mat3& m) {
  if (same_matrix(m, Mat3::Identity())) return true;
  const OrthoMap map{m, center};
  const double eps = cfg.length_tol();
  return std::none_of(cfg.points().begin(), cfg.points().end(), [&](const Vec3& p) { return (map(p) - p).norm() <= eps; });
}

}  // namespace

std::vector<std::vector<Mat3>> enumerate_subgroups(const PointGroup& group) {
  const GroupTable table(group.elements);
  std::vector<std::vector<Mat3>> out;
  for (const auto& mask : subgroup_masks(table)) out.push_back(pick(group.elements, mask));
  return out;
}

bool acts_freely(const Configuration& cfg, const Vec3& center, const std::vector<Mat3>& elements) {
  return std::all_of(elements.begin(), elements.end(), [&](const Mat3& m) { return element_free(cfg, center, m); });
}

Symmetricity symmetricity(const Configuration& cfg) { return symmetricity(cfg, detect_symmetries(cfg)); }

Symmetricity symmetricity(const Configuration& cfg, const PointGroup& theta) {
  Symmetricity rho;
  rho.theta = theta;
  if (cfg.find(theta.center)) {
    rho.center_occupied = true;
    rho.all = {C1()};
    rho.maximal = {C1()};
    rho.witnesses[C1()] = {Mat3::Identity()};
    return rho;
  }
  const GroupTable table(theta.elements);
  std::vector<bool> allowed(theta.order());
  for (std::size_t i = 0; i < theta.order(); ++i) allowed[i] = element_free(cfg, theta.center, theta.elements[i]);
  for (const auto& mask : subgroup_masks(table, allowed)) {
    auto elements = pick(theta.elements, mask);
    const Label label = classify(elements);
    rho.witnesses.emplace(label, std::move(elements));
  }
  for (const auto& [label, _] : rho.witnesses) rho.all.push_back(label);
  rho.maximal = maximal_labels(rho.all);
  return rho;
}

std::vector<Label> maximal_labels(const std::vector<Label>& labels) {
  std::vector<Label> out;
  for (const auto& a : labels) {
    const bool dominated = std::any_of(labels.begin(), labels.end(), [&](const Label& b) {
      if (b == a || b.order() <= a.order()) return false;
      if (a.family == Family::S && b.family != Family::S) return false;
      return is_subgroup(a, b);
    });
    if (!dominated) out.push_back(a);
  }
  return out;
}

bool forbidden(const Label& label) {
  if (label.polyhedral()) return true;
  if (label.family == Family::Ch) return label.param >= 3;
  return label.family == Family::Dh;
}

Solvability is_solvable(const Configuration& cfg) { return is_solvable(symmetricity(cfg)); }

Solvability is_solvable(const Symmetricity& rho) {
  Solvability s;
  s.maximal = rho.maximal;
  auto first = [&](auto pred) -> std::optional<Label> {
    std::optional<Label> best;
    for (const auto& l : rho.all) {
      if (pred(l) && (!best || l.order() > best->order())) best = l;
    }
    return best;
  };
  s.certificate = first([](const Label& l) { return l.family == Family::Ch && l.param >= 3; });
  if (!s.certificate) s.certificate = first([](const Label& l) { return l.family == Family::Dh; });
  if (!s.certificate) {
    for (Family f : {Family::T, Family::Td, Family::Th, Family::O, Family::Oh, Family::I, Family::Ih}) {
      if (std::find(rho.all.begin(), rho.all.end(), simple(f)) != rho.all.end()) {
        s.certificate = simple(f);
        break;
      }
    }
  }
  s.solvable = !s.certificate.has_value();
  return s;
}

}  // namespace planeform
