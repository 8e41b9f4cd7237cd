#include "pappus/scene_file.hpp"

#include <json.hpp>

#include "pappus/error.hpp"
#include "pappus/scalar_text.hpp"

namespace pappus {

using nlohmann::json;

namespace {

Error parse_error(const std::string& why) { return Error(ErrorCode::ParseError, why); }

std::string scalar_text(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw parse_error(std::string("\"") + key + "\" must be a string or integer");
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

SceneFile parse_scene_file(const std::string& json_text) {
  SceneFile f;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw parse_error("scene file must be a JSON object");
    f.field = j.contains("field") ? parse_field_tag(j.at("field").get<std::string>()) : FieldTag::rational;
    if (j.contains("a")) f.a = scalar_text(j, "a");
    if (j.contains("b")) f.b = scalar_text(j, "b");
    if (j.contains("points")) {
      std::map<std::string, std::array<std::string, 3>> pts;
      for (const auto& [name, coords] : j.at("points").items()) {
        if (!coords.is_array() || coords.size() != 3) throw parse_error("point " + name + " needs three coordinates");
        std::array<std::string, 3> c;
        for (std::size_t i = 0; i < 3; ++i) {
          c[i] = coords[i].is_string() ? coords[i].get<std::string>() : std::to_string(coords[i].get<long long>());
        }
        pts[name] = c;
      }
      f.points = std::move(pts);
    }
    if (f.a.empty() != f.b.empty()) throw parse_error("\"a\" and \"b\" must be given together");
    if (f.a.empty() && !f.points) throw parse_error("scene file needs \"a\"/\"b\" or \"points\"");
    if (j.contains("render")) {
      const json& r = j.at("render");
      read_opt(r, "width", f.render.width);
      read_opt(r, "height", f.render.height);
      read_opt(r, "margin", f.render.margin);
      read_opt(r, "carrier_stroke", f.render.carrier_stroke);
      read_opt(r, "join_stroke", f.render.join_stroke);
      read_opt(r, "pappus_stroke", f.render.pappus_stroke);
      read_opt(r, "labels", f.render.labels);
    }
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
  return f;
}

std::string serialize_scene_file(const SceneFile& f) {
  json j;
  j["field"] = std::string(to_string(f.field));
  if (!f.a.empty()) {
    j["a"] = f.a;
    j["b"] = f.b;
  }
  if (f.points) {
    json pts = json::object();
    for (const auto& [name, c] : *f.points) pts[name] = {c[0], c[1], c[2]};
    j["points"] = pts;
  }
  j["render"] = {{"width", f.render.width},
                 {"height", f.render.height},
                 {"margin", f.render.margin},
                 {"carrier_stroke", f.render.carrier_stroke},
                 {"join_stroke", f.render.join_stroke},
                 {"pappus_stroke", f.render.pappus_stroke},
                 {"labels", f.render.labels}};
  return j.dump(2) + "\n";
}

PappusScene scene_from_file(const SceneFile& file, const SceneOptions& options) {
  if (file.a.empty()) throw parse_error("scene file has no parameters a, b");
  return canonical_scene(parse_scalar(file.a, file.field), parse_scalar(file.b, file.field), options);
}

ExplicitPoints explicit_points(const SceneFile& file) {
  if (!file.points) throw parse_error("scene file has no \"points\"");
  const auto get = [&](const std::string& name) {
    const auto it = file.points->find(name);
    if (it == file.points->end()) throw parse_error("missing point " + name);
    const auto& c = it->second;
    try {
      return HomTriple::point(parse_scalar(c[0], file.field), parse_scalar(c[1], file.field),
                              parse_scalar(c[2], file.field));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidInitialData) throw parse_error(name + " is the zero triple");
      throw;
    }
  };
  return {{get("A1"), get("A2"), get("A3")}, {get("B1"), get("B2"), get("B3")}};
}

}  // namespace pappus
