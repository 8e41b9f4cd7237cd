#include "pappus/relabel.hpp"

#include <algorithm>

#include "pappus/error.hpp"

namespace pappus {

namespace {

constexpr std::array<std::string_view, 9> kNames = {"A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"};

Error incompatible(const std::string& why) { return Error(ErrorCode::IncompatibleLabeling, why); }

}  // namespace

std::string_view label_name(Label l) noexcept { return kNames[label_index(l)]; }

std::optional<Label> parse_label(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return kAllLabels[i];
  }
  return std::nullopt;
}

const std::array<std::array<Label, 3>, 9>& pappus_triples() {
  using L = Label;
  static const std::array<std::array<Label, 3>, 9> triples = {{
      {L::A1, L::A2, L::A3},
      {L::B1, L::B2, L::B3},
      {L::C1, L::C2, L::C3},
      {L::A2, L::B3, L::C1},
      {L::A3, L::B2, L::C1},
      {L::A1, L::B3, L::C2},
      {L::A3, L::B1, L::C2},
      {L::A1, L::B2, L::C3},
      {L::A2, L::B1, L::C3},
  }};
  return triples;
}

bool abc_collinear_rule(int i, int j, int k) { return i != j && j != k && i != k; }

Configuration configuration_of(const PappusScene& scene, const Perm3& sigma) {
  Configuration cfg;
  cfg.points.reserve(9);
  for (int i = 1; i <= 3; ++i) cfg.points.push_back(scene.point_a(i));
  for (int j = 1; j <= 3; ++j) cfg.points.push_back(scene.point_b(sigma(j)));
  for (int k = 1; k <= 3; ++k) cfg.points.push_back(scene.c_point(k, sigma));
  return cfg;
}

std::vector<HomTriple> configuration_lines(const Configuration& cfg) {
  std::vector<HomTriple> lines;
  lines.reserve(9);
  for (const auto& t : pappus_triples()) {
    if (projectively_equal(cfg[t[0]], cfg[t[1]])) {
      throw incompatible(std::string(label_name(t[0])) + " = " + std::string(label_name(t[1])));
    }
    HomTriple line = join(cfg[t[0]], cfg[t[1]]);
    if (!incident(cfg[t[2]], line)) {
      throw incompatible(std::string(label_name(t[0])) + ", " + std::string(label_name(t[1])) + ", " +
                         std::string(label_name(t[2])) + " not collinear");
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

Labeling::Labeling() : images_(kAllLabels) {}

Labeling::Labeling(std::array<Label, 9> images) : images_(images) {
  std::array<bool, 9> seen{};
  for (Label l : images_) {
    if (seen[label_index(l)]) throw incompatible("label " + std::string(label_name(l)) + " used twice");
    seen[label_index(l)] = true;
  }
}

bool Labeling::is_identity() const { return images_ == kAllLabels; }

std::string Labeling::to_string() const {
  std::string out;
  for (Label l : kAllLabels) {
    if (!out.empty()) out += ", ";
    out += std::string(label_name(l)) + "->" + std::string(label_name((*this)(l)));
  }
  return out;
}

Configuration apply_relabeling(const Configuration& cfg, const Labeling& lbl) {
  Configuration out;
  out.points = cfg.points;
  for (Label l : kAllLabels) out.points[label_index(lbl(l))] = cfg[l];
  if (lbl.is_identity()) return out;

  configuration_lines(out);
  const auto c = pappus_c_points(std::span<const HomTriple, 3>(out.points.data(), 3),
                                 std::span<const HomTriple, 3>(out.points.data() + 3, 3), Perm3::identity());
  for (int k = 0; k < 3; ++k) {
    if (!projectively_equal(c[static_cast<std::size_t>(k)], out.points[6 + static_cast<std::size_t>(k)])) {
      throw incompatible("new C" + std::to_string(k + 1) + " is not the Pappus point of the new triples");
    }
  }
  return out;
}

DerivedRelabeling relabel_from_initial(const Configuration& cfg, const std::array<Label, 3>& new_a,
                                       const std::array<Label, 3>& new_b) {
  std::array<Label, 9> images{};
  std::array<bool, 9> assigned{};
  std::vector<HomTriple> initial;
  const auto take = [&](Label old_label, Label new_label) {
    if (assigned[label_index(old_label)]) {
      throw incompatible(std::string(label_name(old_label)) + " chosen twice");
    }
    assigned[label_index(old_label)] = true;
    images[label_index(old_label)] = new_label;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    take(new_a[i], kAllLabels[i]);
    initial.push_back(cfg[new_a[i]]);
  }
  for (std::size_t j = 0; j < 3; ++j) {
    take(new_b[j], kAllLabels[3 + j]);
    initial.push_back(cfg[new_b[j]]);
  }
  for (std::size_t t = 0; t < 2; ++t) {
    if (!collinear(initial[3 * t], initial[3 * t + 1], initial[3 * t + 2])) {
      throw incompatible(std::string(t == 0 ? "new A" : "new B") + "-triple is not collinear");
    }
  }

  std::array<HomTriple, 3> c = [&] {
    try {
      return pappus_c_points(std::span<const HomTriple, 3>(initial.data(), 3),
                             std::span<const HomTriple, 3>(initial.data() + 3, 3), Perm3::identity());
    } catch (const Error& e) {
      throw incompatible(std::string("new C-points undefined: ") + e.what());
    }
  }();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto it = std::find_if(kAllLabels.begin(), kAllLabels.end(), [&](Label l) {
      return !assigned[label_index(l)] && projectively_equal(cfg[l], c[k]);
    });
    if (it == kAllLabels.end()) {
      throw incompatible("new C" + std::to_string(k + 1) + " is not a point of the configuration");
    }
    take(*it, kAllLabels[6 + k]);
  }
  Labeling lbl(images);
  return {lbl, apply_relabeling(cfg, lbl)};
}

Labeling swap_a_c_labeling() {
  using L = Label;
  return Labeling({L::C1, L::C2, L::C3, L::B1, L::B2, L::B3, L::A1, L::A2, L::A3});
}

bool same_line_set(const std::vector<HomTriple>& x, const std::vector<HomTriple>& y) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& l : x) {
    bool found = false;
    for (std::size_t j = 0; j < y.size() && !found; ++j) {
      if (!used[j] && projectively_equal(l, y[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace pappus
