#include "palatum/sounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "embedded_data.hpp"
#include "palatum/error.hpp"
#include "palatum/serialization.hpp"

namespace palatum {

SoundLibrary SoundLibrary::builtin() {
  SoundLibrary lib;
  const ShapingParams defaults = default_shaping_params(default_palate());
  for (std::string_view text : embedded::preset_jsons()) {
    lib.add(sound_target_from_json(parse_json_text(text, "builtin preset"), defaults));
  }
  return lib;
}

void SoundLibrary::add(SoundTarget target) {
  if (contains(target.name)) {
    throw ValidationError("duplicate_sound", "sound '" + target.name + "' is defined twice");
  }
  target.params.validate();
  targets_.push_back(std::move(target));
}

void SoundLibrary::load_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("presets directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const ShapingParams defaults = default_shaping_params(default_palate());
  for (const auto& file : files) {
    add(sound_target_from_json(read_json_file(file.string()), defaults));
  }
}

bool SoundLibrary::contains(std::string_view name) const {
  return std::any_of(targets_.begin(), targets_.end(),
                     [&](const SoundTarget& t) { return t.name == name; });
}

const SoundTarget& SoundLibrary::get(std::string_view name) const {
  auto it = std::find_if(targets_.begin(), targets_.end(),
                         [&](const SoundTarget& t) { return t.name == name; });
  if (it != targets_.end()) return *it;
  std::string available;
  for (const auto& t : targets_) {
    if (!available.empty()) available += ", ";
    available += t.name;
  }
  throw ValidationError("unknown_sound",
                        "no sound named '" + std::string(name) + "' (available: " + available + ")");
}

std::vector<std::string> SoundLibrary::names() const {
  std::vector<std::string> out;
  out.reserve(targets_.size());
  for (const auto& t : targets_) out.push_back(t.name);
  return out;
}

namespace {

double mix(double a, double b, double lambda) { return a + lambda * (b - a); }

}  // namespace

SoundTarget interpolate(const SoundTarget& a, const SoundTarget& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("interpolation weight must lie in [0, 1]");
  }
  const double lo = std::max(a.contour.x_front(), b.contour.x_front());
  const double hi = std::min(a.contour.x_back(), b.contour.x_back());
  if (!(lo < hi)) {
    throw DomainError("cannot blend '" + a.name + "' and '" + b.name +
                      "': contour x ranges are disjoint");
  }
  if (lambda == 0.0) return a;
  if (lambda == 1.0) return b;

  std::vector<ContourPoint> pts;
  pts.reserve(kBlendSamples);
  for (int k = 0; k < kBlendSamples; ++k) {
    const double x = k == kBlendSamples - 1 ? hi : lo + (hi - lo) * k / (kBlendSamples - 1);
    pts.push_back({x, mix(midsagittal_height(a.contour, x), midsagittal_height(b.contour, x), lambda)});
  }

  const bool take_b = lambda >= 0.5;
  const ShapingParams& pa = a.params;
  const ShapingParams& pb = b.params;
  ShapingParams p = take_b ? pb : pa;
  p.tth = mix(pa.tth, pb.tth, lambda);
  p.edge_elev_max = mix(pa.edge_elev_max, pb.edge_elev_max, lambda);
  p.posterior_onset_x = mix(pa.posterior_onset_x, pb.posterior_onset_x, lambda);
  p.groove_width = mix(pa.groove_width, pb.groove_width, lambda);
  p.groove_depth = mix(pa.groove_depth, pb.groove_depth, lambda);
  p.lateral_lower_width = mix(pa.lateral_lower_width, pb.lateral_lower_width, lambda);
  p.lateral_lower_depth = mix(pa.lateral_lower_depth, pb.lateral_lower_depth, lambda);

  return {take_b ? b.name : a.name, TongueContour(std::move(pts)), p};
}

void AnimationSpec::validate() const {
  if (segments.empty()) throw ValidationError("animation needs at least one target");
  if (!(fps >= 1.0) || !std::isfinite(fps)) throw ValidationError("animation fps must be >= 1");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.hold_ms > 0.0) || !std::isfinite(s.hold_ms)) {
      throw ValidationError("hold_ms of target " + std::to_string(i) + " must be > 0");
    }
    const bool last = i + 1 == segments.size();
    if (!last && (!(s.transition_ms > 0.0) || !std::isfinite(s.transition_ms))) {
      throw ValidationError("transition_ms of target " + std::to_string(i) + " must be > 0");
    }
  }
}

double AnimationSpec::total_ms() const {
  double total = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    total += segments[i].hold_ms;
    if (i + 1 < segments.size()) total += segments[i].transition_ms;
  }
  return total;
}

std::vector<SoundTarget> animate(const AnimationSpec& spec) {
  spec.validate();
  const double total = spec.total_ms();
  const auto frame_count = static_cast<std::size_t>(std::ceil(total * spec.fps / 1000.0 - 1e-9));

  std::vector<SoundTarget> frames;
  frames.reserve(frame_count);
  std::size_t seg = 0;
  double seg_start = 0.0;  // start of segment `seg`'s hold
  for (std::size_t k = 0; k < frame_count; ++k) {
    const double t = static_cast<double>(k) * 1000.0 / spec.fps;
    // Advance to the segment whose hold + transition window contains t.
    while (seg + 1 < spec.segments.size() &&
           t >= seg_start + spec.segments[seg].hold_ms + spec.segments[seg].transition_ms) {
      seg_start += spec.segments[seg].hold_ms + spec.segments[seg].transition_ms;
      ++seg;
    }
    const AnimationSegment& cur = spec.segments[seg];
    const double hold_end = seg_start + cur.hold_ms;
    if (t < hold_end || seg + 1 == spec.segments.size()) {
      frames.push_back(cur.target);
    } else {
      const double lambda = std::clamp((t - hold_end) / cur.transition_ms, 0.0, 1.0);
      frames.push_back(interpolate(cur.target, spec.segments[seg + 1].target, lambda));
    }
  }
  return frames;
}

}  // namespace palatum
