#include "palatum/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "embedded_data.hpp"
#include "palatum/error.hpp"

namespace palatum {

namespace {

void require_object(const Json& doc, std::string_view what) {
  if (!doc.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
}

// Rejects keys outside `allowed`, naming every offender.
void reject_unknown_keys(const Json& doc, std::initializer_list<std::string_view> allowed,
                         std::string_view what) {
  std::string unknown;
  for (const auto& item : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      if (!unknown.empty()) unknown += ", ";
      unknown += "'" + item.key() + "'";
    }
  }
  if (!unknown.empty()) {
    throw ValidationError(std::string("unknown key(s) in ") + std::string(what) + ": " + unknown);
  }
}

const Json& member(const Json& doc, const char* key, std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ValidationError(std::string(what) + " is missing required key '" + key + "'");
  }
  return *it;
}

double number(const Json& value, std::string_view what) {
  if (!value.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return value.get<double>();
}

std::string string_value(const Json& value, std::string_view what) {
  if (!value.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

bool boolean(const Json& value, std::string_view what) {
  if (!value.is_boolean()) throw ValidationError(std::string(what) + " must be true or false");
  return value.get<bool>();
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("json", "invalid JSON in " + std::string(origin) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

PalateGeometry palate_from_json(const Json& doc) {
  require_object(doc, "palate config");
  reject_unknown_keys(doc, {"shape", "slices"}, "palate config");
  const DomeShape shape = parse_dome_shape(string_value(member(doc, "shape", "palate config"), "shape"));
  const Json& slices = member(doc, "slices", "palate config");
  if (!slices.is_array()) throw ValidationError("palate 'slices' must be an array");
  std::vector<DomeSlice> out;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Json& s = slices[i];
    const std::string what = "palate slice " + std::to_string(i);
    require_object(s, what);
    reject_unknown_keys(s, {"x", "z_min", "z_max", "h"}, what);
    out.emplace_back(number(member(s, "x", what), what + " x"),
                     number(member(s, "z_min", what), what + " z_min"),
                     number(member(s, "z_max", what), what + " z_max"),
                     number(member(s, "h", what), what + " h"), shape);
  }
  return PalateGeometry(shape, std::move(out));
}

Json palate_to_json(const PalateGeometry& geometry) {
  Json slices = Json::array();
  for (const auto& s : geometry.slices()) {
    slices.push_back({{"x", s.x()}, {"z_min", s.z_min()}, {"z_max", s.z_max()}, {"h", s.h()}});
  }
  return {{"shape", to_string(geometry.shape())}, {"slices", std::move(slices)}};
}

const PalateGeometry& default_palate() {
  static const PalateGeometry geometry =
      palate_from_json(parse_json_text(embedded::default_palate_json(), "builtin palate"));
  return geometry;
}

ShapingParams shaping_params_from_json(const Json& doc, const ShapingParams& defaults) {
  require_object(doc, "params");
  reject_unknown_keys(doc,
                      {"tt_manner", "td_manner", "tth", "edge_elev_max", "posterior_onset_x",
                       "groove_enabled", "groove_width", "groove_depth", "lateral_lower_enabled",
                       "lateral_lower_width", "lateral_lower_depth"},
                      "params");
  ShapingParams p = defaults;
  auto num = [&](const char* key, double& field) {
    if (auto it = doc.find(key); it != doc.end()) field = number(*it, key);
  };
  auto flag = [&](const char* key, bool& field) {
    if (auto it = doc.find(key); it != doc.end()) field = boolean(*it, key);
  };
  if (auto it = doc.find("tt_manner"); it != doc.end()) {
    p.tt_manner = parse_tip_manner(string_value(*it, "tt_manner"));
  }
  if (auto it = doc.find("td_manner"); it != doc.end()) {
    p.td_manner = parse_dorsum_manner(string_value(*it, "td_manner"));
  }
  num("tth", p.tth);
  num("edge_elev_max", p.edge_elev_max);
  num("posterior_onset_x", p.posterior_onset_x);
  flag("groove_enabled", p.groove_enabled);
  num("groove_width", p.groove_width);
  num("groove_depth", p.groove_depth);
  flag("lateral_lower_enabled", p.lateral_lower_enabled);
  num("lateral_lower_width", p.lateral_lower_width);
  num("lateral_lower_depth", p.lateral_lower_depth);
  p.validate();
  return p;
}

Json shaping_params_to_json(const ShapingParams& p) {
  return {{"tt_manner", to_string(p.tt_manner)},
          {"td_manner", to_string(p.td_manner)},
          {"tth", p.tth},
          {"edge_elev_max", p.edge_elev_max},
          {"posterior_onset_x", p.posterior_onset_x},
          {"groove_enabled", p.groove_enabled},
          {"groove_width", p.groove_width},
          {"groove_depth", p.groove_depth},
          {"lateral_lower_enabled", p.lateral_lower_enabled},
          {"lateral_lower_width", p.lateral_lower_width},
          {"lateral_lower_depth", p.lateral_lower_depth}};
}

SoundTarget sound_target_from_json(const Json& doc, const ShapingParams& defaults) {
  require_object(doc, "sound target");
  reject_unknown_keys(doc, {"name", "contour", "params"}, "sound target");
  std::string name = string_value(member(doc, "name", "sound target"), "name");
  if (name.empty()) throw ValidationError("sound target name must not be empty");
  const std::string what = "sound '" + name + "'";

  const Json& contour = member(doc, "contour", what);
  if (!contour.is_array()) throw ValidationError(what + " contour must be an array of [x, u]");
  std::vector<ContourPoint> pts;
  for (const auto& p : contour) {
    if (!p.is_array() || p.size() != 2) {
      throw ValidationError(what + " contour entries must be [x, u] pairs");
    }
    pts.push_back({number(p[0], what + " contour x"), number(p[1], what + " contour u")});
  }

  ShapingParams params = defaults;
  if (auto it = doc.find("params"); it != doc.end()) {
    params = shaping_params_from_json(*it, defaults);
  }
  params.validate();
  return {std::move(name), TongueContour(std::move(pts)), params};
}

SoundTarget sound_target_from_json(const Json& doc) {
  return sound_target_from_json(doc, default_shaping_params(default_palate()));
}

Json sound_target_to_json(const SoundTarget& target) {
  Json contour = Json::array();
  for (const auto& p : target.contour.points()) contour.push_back({p.x, p.u});
  return {{"name", target.name},
          {"contour", std::move(contour)},
          {"params", shaping_params_to_json(target.params)}};
}

AnimationSpec animation_spec_from_json(const Json& doc, const SoundLibrary& library) {
  require_object(doc, "animation spec");
  reject_unknown_keys(doc, {"fps", "targets"}, "animation spec");
  AnimationSpec spec;
  if (auto it = doc.find("fps"); it != doc.end()) spec.fps = number(*it, "fps");
  const Json& targets = member(doc, "targets", "animation spec");
  if (!targets.is_array()) throw ValidationError("animation 'targets' must be an array");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Json& t = targets[i];
    const std::string what = "animation target " + std::to_string(i);
    require_object(t, what);
    reject_unknown_keys(t, {"sound", "hold_ms", "transition_ms"}, what);
    AnimationSegment seg{library.get(string_value(member(t, "sound", what), what + " sound")),
                         number(member(t, "hold_ms", what), what + " hold_ms"), 0.0};
    if (auto it = t.find("transition_ms"); it != t.end()) {
      seg.transition_ms = number(*it, what + " transition_ms");
    }
    spec.segments.push_back(std::move(seg));
  }
  spec.validate();
  return spec;
}

Json contact_to_json(const ContactClass& contact) {
  struct Visitor {
    Json operator()(const NoContact&) const { return {{"case", "none"}}; }
    Json operator()(const Intersection& i) const {
      return {{"case", "intersection"}, {"z_left", i.z_left}, {"z_right", i.z_right}};
    }
    Json operator()(const FullContact& f) const { return {{"case", "full"}, {"z_apex", f.z_apex}}; }
  };
  return std::visit(Visitor{}, contact);
}

Json epg_to_json(const EPGFrame& frame) {
  Json cells = Json::array();
  for (int i = 0; i < frame.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < frame.cols(); ++j) row.push_back(frame.at(i, j));
    cells.push_back(std::move(row));
  }
  return {{"rows", frame.rows()},
          {"cols", frame.cols()},
          {"cells", std::move(cells)},
          {"x_of_row", frame.x_of_row()},
          {"z_frac_of_col", frame.z_frac_of_col()}};
}

}  // namespace palatum
