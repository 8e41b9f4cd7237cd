#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pappus/scene.hpp"

namespace pappus {

enum class Label { A1, A2, A3, B1, B2, B3, C1, C2, C3 };

inline constexpr std::array<Label, 9> kAllLabels = {Label::A1, Label::A2, Label::A3, Label::B1, Label::B2,
                                                    Label::B3, Label::C1, Label::C2, Label::C3};

std::string_view label_name(Label l) noexcept;
std::optional<Label> parse_label(std::string_view text);
inline std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

/// The nine collinear label triples of the Pappus configuration, in incidence
/// table row order: L_A, L_B, L_C, L(A2,B3), L(A3,B2), L(A1,B3), L(A3,B1),
/// L(A1,B2), L(A2,B1). The C-point on each join is listed last.
const std::array<std::array<Label, 3>, 9>& pappus_triples();

/// True iff A_i, B_j, C_k lie on a common configuration line, i.e. {i,j,k} = {1,2,3}.
bool abc_collinear_rule(int i, int j, int k);

/// Nine labeled points of a Pappus configuration (not necessarily canonical).
struct Configuration {
  std::vector<HomTriple> points;  // indexed by Label

  const HomTriple& operator[](Label l) const { return points.at(label_index(l)); }
};

/// The configuration of a scene for one Pappus line: A_i, B_{sigma(j)} labeled
/// B_j, and C_{k,sigma}.
Configuration configuration_of(const PappusScene& scene, const Perm3& sigma = Perm3::identity());

/// Lines of pappus_triples() through the configuration's points. Throws
/// IncompatibleLabeling if some triple is not collinear.
std::vector<HomTriple> configuration_lines(const Configuration& cfg);

/// A bijection old label -> new label.
class Labeling {
 public:
  Labeling();  // identity
  /// Throws IncompatibleLabeling unless `images` is a permutation of the labels.
  explicit Labeling(std::array<Label, 9> images);

  Label operator()(Label old_label) const { return images_[label_index(old_label)]; }
  const std::array<Label, 9>& images() const { return images_; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::array<Label, 9> images_;
};

/// Renames every point: new[lbl(l)] = old[l]. Throws IncompatibleLabeling if
/// the renamed points no longer satisfy all nine collinearities, or the new
/// C-points differ from the Pappus construction on the new A- and B-triples.
Configuration apply_relabeling(const Configuration& cfg, const Labeling& lbl);

struct DerivedRelabeling {
  Labeling labeling;
  Configuration configuration;
};

/// Picks old points for the new A1..A3 and B1..B3, constructs the new
/// C-points by the Pappus construction and identifies them among the old
/// points. Throws IncompatibleLabeling if the triples are not collinear or a
/// constructed point is not one of the nine.
DerivedRelabeling relabel_from_initial(const Configuration& cfg, const std::array<Label, 3>& new_a,
                                       const std::array<Label, 3>& new_b);

/// Swap A_i <-> C_i: the old Pappus line becomes the new L_A.
Labeling swap_a_c_labeling();

/// True iff the two line lists agree as sets up to projective equality.
bool same_line_set(const std::vector<HomTriple>& x, const std::vector<HomTriple>& y);

}  // namespace pappus
