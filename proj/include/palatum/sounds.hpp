#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "palatum/tongue.hpp"

namespace palatum {

/// Articulatory target of one speech sound.
struct SoundTarget {
  std::string name;
  TongueContour contour;
  ShapingParams params;

  friend bool operator==(const SoundTarget&, const SoundTarget&) = default;
};

/// Named sound targets, kept in load order.
class SoundLibrary {
 public:
  SoundLibrary() = default;

  /// The twelve presets shipped with the library.
  static SoundLibrary builtin();

  /// Throws ValidationError on a duplicate name.
  void add(SoundTarget target);
  /// Adds every *.json file of `dir` in filename order.
  void load_directory(const std::filesystem::path& dir);

  bool contains(std::string_view name) const;
  /// Throws ValidationError("unknown_sound") listing the available names.
  const SoundTarget& get(std::string_view name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return targets_.size(); }

 private:
  std::vector<SoundTarget> targets_;
};

/// Number of contour points both targets are resampled to before blending.
inline constexpr int kBlendSamples = 64;

/// Linear blend of two targets. Numeric parameters and contour heights mix
/// linearly; manners and flags come from `a` below lambda = 0.5 and from `b`
/// from there on. lambda = 0 and 1 return the inputs unchanged.
SoundTarget interpolate(const SoundTarget& a, const SoundTarget& b, double lambda);

struct AnimationSegment {
  SoundTarget target;
  double hold_ms = 0.0;
  double transition_ms = 0.0;  ///< blend into the next segment; unused on the last
};

struct AnimationSpec {
  std::vector<AnimationSegment> segments;
  double fps = 25.0;

  void validate() const;
  double total_ms() const;
};

/// One target per frame, frame k sampled at k * 1000 / fps milliseconds.
std::vector<SoundTarget> animate(const AnimationSpec& spec);

}  // namespace palatum
