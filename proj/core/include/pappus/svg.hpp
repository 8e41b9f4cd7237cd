#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pappus/scene.hpp"
#include "pappus/scene_file.hpp"

namespace pappus {

/// Affine chart { p : form . p != 0 } with coordinates (r0.p, r1.p) / (form.p).
struct Chart {
  std::array<BigRational, 3> form;
  std::string name;
};

/// The literal z = 1 chart.
Chart chart_z();
/// "z", or three comma-separated rationals "p,q,r". Throws ParseError.
Chart parse_chart(const std::string& text);
/// First chart from a fixed list of linear forms keeping every given point finite.
std::optional<Chart> auto_chart(const std::vector<HomTriple>& points);

struct SvgOptions {
  RenderOptions render;
  std::vector<Perm3> sigmas = {Perm3::identity()};
  bool s_lines = false;         // also draw every Pappus line through S
  bool show_s = false;          // always draw the S marker
  bool allow_infinite = false;  // drop configuration points at infinity instead of failing
  std::optional<Chart> chart;   // automatic when empty
};

struct SvgResult {
  std::string svg;
  std::vector<std::string> warnings;
  Chart chart;
};

/// SVG 1.1 figure of a rational scene: carrier lines solid, joins dashed,
/// Pappus lines highlighted, labeled point markers. Byte-identical output
/// for identical input. Throws FieldMismatch for non-rational scenes,
/// AllPointsAtInfinity if nothing is finite in the chart.
SvgResult render_svg(const PappusScene& scene, const SvgOptions& options = {});

}  // namespace pappus
