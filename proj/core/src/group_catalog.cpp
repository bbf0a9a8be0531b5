#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <regex>
#include <set>

#include "planeform/symmetry.hpp"

namespace planeform {

namespace {

constexpr double kPi = std::numbers::pi;

bool close(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 9; ++i) {
    if (std::abs(a.data()[i] - b.data()[i]) > kMatrixTolerance) return false;
  }
  return true;
}

std::size_t lookup(const std::vector<Mat3>& elements, const Mat3& m) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (close(elements[i], m)) return i;
  }
  return elements.size();
}

Mat3 rz(double angle) { return rotation(Vec3::UnitZ(), angle); }

}  // namespace

int Label::order() const {
  switch (family) {
    case Family::C1: return 1;
    case Family::Ci:
    case Family::Cs: return 2;
    case Family::C: return param;
    case Family::Ch:
    case Family::Cv: return 2 * param;
    case Family::D: return 2 * param;
    case Family::Dh:
    case Family::Dv: return 4 * param;
    case Family::S: return param;
    case Family::T: return 12;
    case Family::Td:
    case Family::Th:
    case Family::O: return 24;
    case Family::Oh: return 48;
    case Family::I: return 60;
    case Family::Ih: return 120;
  }
  return 0;
}

std::string Label::str() const {
  const std::string p = std::to_string(param);
  switch (family) {
    case Family::C1: return "C1";
    case Family::Ci: return "Ci";
    case Family::Cs: return "Cs";
    case Family::C: return "C" + p;
    case Family::Ch: return "C" + p + "h";
    case Family::Cv: return "C" + p + "v";
    case Family::D: return "D" + p;
    case Family::Dh: return "D" + p + "h";
    case Family::Dv: return "D" + p + "v";
    case Family::S: return "S" + p;
    case Family::T: return "T";
    case Family::Td: return "Td";
    case Family::Th: return "Th";
    case Family::O: return "O";
    case Family::Oh: return "Oh";
    case Family::I: return "I";
    case Family::Ih: return "Ih";
  }
  return "?";
}

bool Label::polyhedral() const { return family >= Family::T; }

bool Label::rotation_only() const {
  return family == Family::C1 || family == Family::C || family == Family::D || family == Family::T ||
         family == Family::O || family == Family::I;
}

Label Label::parse(const std::string& text) {
  static const std::map<std::string, Family> fixed = {
      {"C1", Family::C1}, {"Ci", Family::Ci}, {"Cs", Family::Cs}, {"T", Family::T},   {"Td", Family::Td}, {"Th", Family::Th},
      {"O", Family::O},   {"Oh", Family::Oh}, {"I", Family::I},   {"Ih", Family::Ih}};
  if (auto it = fixed.find(text); it != fixed.end()) return simple(it->second);
  static const std::regex re(R"(([CDS])(\d+)([hv]?))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error("unknown group label: " + text);
  const int p = std::stoi(m[2].str());
  const char kind = m[1].str()[0];
  const std::string suffix = m[3].str();
  if (kind == 'S') {
    if (!suffix.empty() || p < 4 || p % 2 != 0) throw Error("unknown group label: " + text);
    return S(p);
  }
  if (p < 2) throw Error("unknown group label: " + text);
  if (kind == 'C') return suffix.empty() ? C(p) : (suffix == "h" ? Ch(p) : Cv(p));
  return suffix.empty() ? D(p) : (suffix == "h" ? Dh(p) : Dv(p));
}

Label C(int k) { return Label{Family::C, k}; }
Label Ch(int k) { return Label{Family::Ch, k}; }
Label Cv(int k) { return Label{Family::Cv, k}; }
Label D(int l) { return Label{Family::D, l}; }
Label Dh(int l) { return Label{Family::Dh, l}; }
Label Dv(int l) { return Label{Family::Dv, l}; }
Label S(int m) { return Label{Family::S, m}; }
Label Cs() { return Label{Family::Cs, 0}; }
Label Ci() { return Label{Family::Ci, 0}; }
Label C1() { return Label{Family::C1, 0}; }
Label simple(Family f) { return Label{f, 0}; }

std::vector<Mat3> closure(const std::vector<Mat3>& generators, std::size_t limit) {
  std::vector<Mat3> out{Mat3::Identity()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      const Mat3 m = out[i] * g;
      if (lookup(out, m) == out.size()) {
        out.push_back(m);
        if (out.size() > limit) throw Error("group not finite");
      }
    }
  }
  return out;
}

std::vector<Mat3> canonical_group(const Label& label) {
  const Mat3 id = Mat3::Identity();
  const Mat3 sigma_h = reflection(Vec3::UnitZ());
  const Mat3 c2x = rotation(Vec3::UnitX(), kPi);
  const Mat3 c3 = rotation(Vec3(1, 1, 1), 2 * kPi / 3);
  const int p = label.param;
  switch (label.family) {
    case Family::C1: return {id};
    case Family::Ci: return closure({-id});
    case Family::Cs: return closure({sigma_h});
    case Family::C: return closure({rz(2 * kPi / p)});
    case Family::Ch: return closure({rz(2 * kPi / p), sigma_h});
    case Family::Cv: return closure({rz(2 * kPi / p), reflection(Vec3::UnitY())});
    case Family::D: return closure({rz(2 * kPi / p), c2x});
    case Family::Dh: return closure({rz(2 * kPi / p), c2x, sigma_h});
    case Family::Dv: {
      const double a = kPi / (2 * p);
      return closure({rz(2 * kPi / p), c2x, reflection(Vec3(-std::sin(a), std::cos(a), 0))});
    }
    case Family::S: return closure({sigma_h * rz(2 * kPi / p)});
    case Family::T: return closure({c3, rz(kPi)});
    case Family::Td: return closure({c3, rz(kPi), reflection(Vec3(1, -1, 0))});
    case Family::Th: return closure({c3, rz(kPi), -id});
    case Family::O: return closure({rz(kPi / 2), c3});
    case Family::Oh: return closure({rz(kPi / 2), c3, -id});
    case Family::I:
    case Family::Ih: {
      const double phi = std::numbers::phi;
      std::vector<Mat3> gens{rz(kPi), c3, rotation(Vec3(0, 1, phi), 2 * kPi / 5)};
      if (label.family == Family::Ih) gens.push_back(-id);
      return closure(gens);
    }
  }
  throw Error("unknown group label");
}

namespace {

// Elements located by a weighted sum of their entries; matrices equal within
// kMatrixTolerance have keys within span * kMatrixTolerance.
class ElementIndex {
 public:
  explicit ElementIndex(const std::vector<Mat3>& elements) : elements_(elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) keyed_.emplace_back(key(elements[i]), i);
    std::sort(keyed_.begin(), keyed_.end());
  }

  [[nodiscard]] std::size_t find(const Mat3& m) const {
    const double k = key(m);
    const double span = std::accumulate(kWeights.begin(), kWeights.end(), 0.0) * kMatrixTolerance;
    auto it = std::lower_bound(keyed_.begin(), keyed_.end(), std::pair{k - span, std::size_t{0}});
    for (; it != keyed_.end() && it->first <= k + span; ++it) {
      if (close(elements_[it->second], m)) return it->second;
    }
    return elements_.size();
  }

 private:
  static constexpr std::array<double, 9> kWeights = {1.0,
                                                     1.4142135623730951,
                                                     1.7320508075688772,
                                                     2.2360679774997898,
                                                     2.6457513110645907,
                                                     3.3166247903554,
                                                     3.6055512754639891,
                                                     4.1231056256176606,
                                                     4.358898943540674};

  static double key(const Mat3& m) {
    double k = 0.0;
    for (std::size_t i = 0; i < 9; ++i) k += kWeights[i] * m.data()[i];
    return k;
  }

  const std::vector<Mat3>& elements_;
  std::vector<std::pair<double, std::size_t>> keyed_;
};

}  // namespace

bool is_closed(const std::vector<Mat3>& elements) {
  const ElementIndex index(elements);
  const std::size_t n = elements.size();
  const std::size_t id = index.find(Mat3::Identity());
  if (id == n) return false;
  // Grow the subgroup generated by a greedy generator set, multiplying every
  // reached element by every generator; closure follows once all are reached.
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> members{id};
  reached[id] = true;
  std::vector<std::size_t> gens;
  for (std::size_t s = 0; s < n; ++s) {
    if (reached[s]) continue;
    gens.push_back(s);
    const std::size_t old = members.size();  // already closed under the earlier generators
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t g = i < old ? gens.size() - 1 : 0; g < gens.size(); ++g) {
        const std::size_t p = index.find(elements[members[i]] * elements[gens[g]]);
        if (p == n) return false;
        if (!reached[p]) {
          reached[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return true;
}

GroupTable::GroupTable(const std::vector<Mat3>& elements) : n_(elements.size()), table_(n_ * n_) {
  const ElementIndex index(elements);
  identity_ = index.find(Mat3::Identity());
  if (identity_ == n_) throw Error("inconsistent tolerance");
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const std::size_t c = index.find(elements[a] * elements[b]);
      if (c == n_) throw Error("inconsistent tolerance");
      table_[a * n_ + b] = c;
    }
  }
}

std::vector<bool> GroupTable::generate(const std::vector<bool>& seed) const {
  std::vector<bool> in(n_, false);
  std::vector<std::size_t> members{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < n_; ++i) {
    if (seed[i] && !in[i]) {
      in[i] = true;
      members.push_back(i);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t c : {mul(members[i], members[j]), mul(members[j], members[i])}) {
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
      }
    }
  }
  return in;
}

std::vector<std::vector<bool>> subgroup_masks(const GroupTable& table, const std::vector<bool>& allowed) {
  const std::size_t n = table.size();
  auto ok = [&](std::size_t g) { return allowed.empty() || allowed[g]; };
  std::vector<bool> trivial(n, false);
  trivial[table.identity()] = true;
  std::vector<std::vector<bool>> found{trivial};
  std::set<std::vector<bool>> seen{trivial};
  for (std::size_t h = 0; h < found.size(); ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      if (found[h][g] || !ok(g)) continue;
      std::vector<bool> seed = found[h];
      seed[g] = true;
      std::vector<bool> k = table.generate(seed);
      bool admissible = true;
      for (std::size_t x = 0; x < n && admissible; ++x) admissible = !k[x] || ok(x);
      if (!admissible) continue;
      if (seen.insert(k).second) found.push_back(std::move(k));
    }
  }
  return found;
}

bool is_subgroup(const Label& sub, const Label& super) {
  if (sub == super) return true;
  if (super.order() % sub.order() != 0) return false;
  static std::mutex mu;
  static std::map<Label, std::set<Label>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(super);
  if (it == cache.end()) {
    const auto elements = canonical_group(super);
    const GroupTable table(elements);
    std::set<Label> labels;
    for (const auto& mask : subgroup_masks(table)) {
      std::vector<Mat3> sub_elements;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (mask[i]) sub_elements.push_back(elements[i]);
      }
      labels.insert(classify(sub_elements));
    }
    it = cache.emplace(super, std::move(labels)).first;
  }
  return it->second.contains(sub);
}

}  // namespace planeform
