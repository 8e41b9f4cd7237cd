#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "pappus/scene.hpp"

namespace pappus {

struct RenderOptions {
  int width = 800;
  int height = 800;
  double margin = 0.1;  // fraction of the point bounding box added on each side
  double carrier_stroke = 2.0;
  double join_stroke = 1.0;
  double pappus_stroke = 2.5;
  bool labels = true;

  friend bool operator==(const RenderOptions&, const RenderOptions&) = default;
};

/// {"field", "a", "b", optional "points": {"A1": ["x","y","z"], ...}, optional "render"}.
struct SceneFile {
  FieldTag field = FieldTag::rational;
  std::string a;
  std::string b;
  std::optional<std::map<std::string, std::array<std::string, 3>>> points;
  RenderOptions render;

  friend bool operator==(const SceneFile&, const SceneFile&) = default;
};

/// Throws ParseError on malformed JSON or missing keys.
SceneFile parse_scene_file(const std::string& json_text);
/// Pretty-printed with sorted keys.
std::string serialize_scene_file(const SceneFile& file);

/// Canonical scene for the file's field and parameters.
PappusScene scene_from_file(const SceneFile& file, const SceneOptions& options = {});

struct ExplicitPoints {
  std::array<HomTriple, 3> a;
  std::array<HomTriple, 3> b;
};

/// A1..A3 and B1..B3 from "points". Throws ParseError if absent or incomplete.
ExplicitPoints explicit_points(const SceneFile& file);

}  // namespace pappus
