#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "palatum/contact.hpp"
#include "palatum/dome.hpp"
#include "palatum/epg.hpp"
#include "palatum/sounds.hpp"
#include "palatum/tongue.hpp"

// JSON documents read and written by the library. Readers are strict:
// unknown keys and wrongly typed values raise ValidationError.

namespace palatum {

using Json = nlohmann::ordered_json;

/// Parses JSON text, mapping syntax errors to ValidationError("json").
Json parse_json_text(std::string_view text, std::string_view origin);
Json read_json_file(const std::string& path);

PalateGeometry palate_from_json(const Json& doc);
Json palate_to_json(const PalateGeometry& geometry);

/// The canonical palate compiled into the library.
const PalateGeometry& default_palate();

/// Missing params keys fall back to `defaults`.
SoundTarget sound_target_from_json(const Json& doc, const ShapingParams& defaults);
SoundTarget sound_target_from_json(const Json& doc);
Json sound_target_to_json(const SoundTarget& target);

ShapingParams shaping_params_from_json(const Json& doc, const ShapingParams& defaults);
Json shaping_params_to_json(const ShapingParams& params);

/// { "fps": n, "targets": [ { "sound": name, "hold_ms": n, "transition_ms": n }, ... ] }
AnimationSpec animation_spec_from_json(const Json& doc, const SoundLibrary& library);

Json contact_to_json(const ContactClass& contact);
Json epg_to_json(const EPGFrame& frame);

}  // namespace palatum
