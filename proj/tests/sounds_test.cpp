#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "palatum/epg.hpp"
#include "palatum/error.hpp"
#include "palatum/serialization.hpp"
#include "palatum/sounds.hpp"
#include "patterns.hpp"

using namespace palatum;

namespace {

SoundTarget flat_target(const std::string& name, double u) {
  return {name, TongueContour({{0.0, u}, {52.0, u}}), ShapingParams{}};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("palatum_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST(SoundLibrary, BuiltinHasTheTwelvePanelSounds) {
  const SoundLibrary lib = SoundLibrary::builtin();
  EXPECT_EQ(lib.names(),
            (std::vector<std::string>{"i:", "a:", "u:", "l", "t", "k", "θ", "s", "ʃ", "ç", "x", "j"}));
}

TEST(SoundLibrary, PresetShapes) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const SoundTarget& a = lib.get("a:");
  for (double x = default_palate().x_front(); x <= default_palate().x_back(); x += 0.5) {
    EXPECT_LT(midsagittal_height(a.contour, x), 0.0);
  }
  const SoundTarget& t = lib.get("t");
  EXPECT_EQ(t.params.tt_manner, TipManner::Full);
  EXPECT_EQ(t.params.tth, 1.0);
  EXPECT_GE(midsagittal_height(t.contour, 2.0), slice_at(default_palate(), 2.0).h());

  const SoundTarget& l = lib.get("l");
  EXPECT_EQ(l.params.tt_manner, TipManner::Lateral);
  EXPECT_TRUE(l.params.lateral_lower_enabled);
}

TEST(SoundLibrary, UnknownNameListsAvailable) {
  const SoundLibrary lib = SoundLibrary::builtin();
  try {
    lib.get("q");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "unknown_sound");
    EXPECT_NE(std::string(e.what()).find("i:, a:, u:"), std::string::npos) << e.what();
  }
}

TEST(SoundLibrary, DuplicateNamesRejected) {
  SoundLibrary lib;
  lib.add(flat_target("m", 1.0));
  EXPECT_THROW(lib.add(flat_target("m", 2.0)), ValidationError);
}

TEST(SoundLibrary, LoadsUserDirectoryInFilenameOrder) {
  const auto dir = scratch_dir("presets");
  write_file(dir / "b.json", R"({"name": "n", "contour": [[0, 1], [50, 2]]})");
  write_file(dir / "a.json", R"({"name": "m", "contour": [[0, 1], [50, 2]], "params": {"tth": 0.5}})");
  write_file(dir / "notes.txt", "ignored");
  SoundLibrary lib = SoundLibrary::builtin();
  lib.load_directory(dir);
  ASSERT_EQ(lib.size(), 14u);
  EXPECT_EQ(lib.names()[12], "m");
  EXPECT_EQ(lib.names()[13], "n");
  EXPECT_DOUBLE_EQ(lib.get("m").params.tth, 0.5);
  // Omitted params take the defaults scaled to the built-in palate.
  EXPECT_EQ(lib.get("n").params, default_shaping_params(default_palate()));

  write_file(dir / "c.json", R"({"name": "t", "contour": [[0, 1], [50, 2]]})");
  SoundLibrary again = SoundLibrary::builtin();
  EXPECT_THROW(again.load_directory(dir), ValidationError);
  EXPECT_THROW(again.load_directory(dir / "missing"), IoError);
}

TEST(Interpolate, EndpointsAndMidpoint) {
  const SoundTarget a = flat_target("a", 2.0);
  const SoundTarget b = flat_target("b", 8.0);
  EXPECT_EQ(interpolate(a, b, 0.0), a);
  EXPECT_EQ(interpolate(a, b, 1.0), b);
  const SoundTarget mid = interpolate(a, b, 0.5);
  EXPECT_EQ(mid.contour.points().size(), static_cast<std::size_t>(kBlendSamples));
  for (const auto& p : mid.contour.points()) EXPECT_DOUBLE_EQ(p.u, 5.0);
  EXPECT_THROW(interpolate(a, b, 1.5), DomainError);
}

TEST(Interpolate, NumericParamsBlendEnumsSwitchAtHalf) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const SoundTarget& t = lib.get("t");
  const SoundTarget& s = lib.get("s");
  const SoundTarget early = interpolate(t, s, 0.25);
  EXPECT_FALSE(early.params.groove_enabled);
  EXPECT_DOUBLE_EQ(early.params.groove_depth, 0.75 * t.params.groove_depth + 0.25 * s.params.groove_depth);
  EXPECT_EQ(early.name, "t");
  const SoundTarget late = interpolate(t, s, 0.5);
  EXPECT_TRUE(late.params.groove_enabled);
  EXPECT_EQ(late.name, "s");

  const SoundTarget& k = lib.get("k");
  const SoundTarget tk = interpolate(t, k, 0.4);
  EXPECT_EQ(tk.params.tt_manner, TipManner::Full);
  EXPECT_DOUBLE_EQ(tk.params.posterior_onset_x, 0.6 * 6.0 + 0.4 * 28.0);
}

TEST(Interpolate, ResamplesOverCommonRange) {
  const SoundTarget a{"a", TongueContour({{0.0, 0.0}, {40.0, 4.0}}), {}};
  const SoundTarget b{"b", TongueContour({{10.0, 10.0}, {60.0, 10.0}}), {}};
  const SoundTarget m = interpolate(a, b, 0.5);
  EXPECT_DOUBLE_EQ(m.contour.x_front(), 10.0);
  EXPECT_DOUBLE_EQ(m.contour.x_back(), 40.0);
  EXPECT_DOUBLE_EQ(m.contour.points().front().u, 5.5);
  EXPECT_DOUBLE_EQ(m.contour.points().back().u, 7.0);
  const SoundTarget c{"c", TongueContour({{50.0, 0.0}, {60.0, 0.0}}), {}};
  EXPECT_THROW(interpolate(a, c, 0.5), DomainError);
}

TEST(Animate, SingleHold) {
  AnimationSpec spec{{{flat_target("a", 1.0), 1000.0, 0.0}}, 10.0};
  const auto frames = animate(spec);
  ASSERT_EQ(frames.size(), 10u);
  for (const auto& f : frames) EXPECT_EQ(f, spec.segments[0].target);
}

TEST(Animate, FrameCountRoundsUp) {
  const SoundTarget a = flat_target("a", 2.0);
  const SoundTarget b = flat_target("b", 8.0);
  AnimationSpec spec{{{a, 100.0, 100.0}, {b, 100.0, 0.0}}, 10.0};
  EXPECT_EQ(animate(spec).size(), 3u);
  spec.fps = 25.0;
  spec.segments[0].hold_ms = 90.0;  // 290 ms at 25 fps -> 7.25 frames
  EXPECT_EQ(animate(spec).size(), 8u);
}

TEST(Animate, TransitionFramesBlendLinearlyInTime) {
  const SoundTarget a = flat_target("a", 2.0);
  const SoundTarget b = flat_target("b", 8.0);
  // 100 fps: frames every 10 ms; transition spans 100..300 ms.
  const AnimationSpec spec{{{a, 100.0, 200.0}, {b, 100.0, 0.0}}, 100.0};
  const auto frames = animate(spec);
  ASSERT_EQ(frames.size(), 40u);
  EXPECT_EQ(frames[5], a);
  EXPECT_EQ(frames[10], a);  // lambda = 0 at the start of the transition
  EXPECT_EQ(frames[20], interpolate(a, b, 0.5));
  EXPECT_EQ(frames[15], interpolate(a, b, 0.25));
  EXPECT_EQ(frames[30], b);
  EXPECT_EQ(frames[39], b);
  EXPECT_EQ(animate(spec), frames);
}

TEST(Animate, ValidatesSpec) {
  const SoundTarget a = flat_target("a", 2.0);
  EXPECT_THROW(animate(AnimationSpec{{}, 25.0}), ValidationError);
  EXPECT_THROW(animate(AnimationSpec{{{a, 100.0, 0.0}}, 0.5}), ValidationError);
  EXPECT_THROW(animate(AnimationSpec{{{a, 0.0, 0.0}}, 25.0}), ValidationError);
  EXPECT_THROW(animate(AnimationSpec{{{a, 100.0, 0.0}, {a, 100.0, 0.0}}, 25.0}), ValidationError);
}

class PresetPattern : public ::testing::TestWithParam<DomeShape> {};

TEST_P(PresetPattern, MatchesStructuralClass) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const PalateGeometry g = default_palate().with_shape(GetParam());
  for (const auto& name : lib.names()) {
    const SoundTarget& t = lib.get(name);
    const EPGFrame f = compute_epg(g, t.contour, t.params, 8, 8);
    const auto result = palatum::testing::check_preset_pattern(name, f);
    EXPECT_TRUE(result.ok) << name << ": " << result.detail << "\n" << epg_text(f);
  }
}

// Refining 8 -> 64 columns only moves boundaries: no run of more than two
// coarse cells disagrees with the majority of its fine sub-cells.
TEST_P(PresetPattern, CoarseGridAgreesWithFineGrid) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const PalateGeometry g = default_palate().with_shape(GetParam());
  for (const auto& name : lib.names()) {
    const SoundTarget& t = lib.get(name);
    const EPGFrame coarse = compute_epg(g, t.contour, t.params, 8, 8);
    const EPGFrame fine = compute_epg(g, t.contour, t.params, 8, 64);
    for (int i = 0; i < 8; ++i) {
      int run = 0;
      for (int j = 0; j < 8; ++j) {
        int hits = 0;
        for (int k = 0; k < 8; ++k) hits += fine.at(i, 8 * j + k) ? 1 : 0;
        const bool disagrees = (hits > 4 && !coarse.at(i, j)) || (hits < 4 && coarse.at(i, j));
        run = disagrees ? run + 1 : 0;
        EXPECT_LE(run, 2) << name << " row " << i;
      }
    }
  }
}

// Blending between any two presets at 25 fps over a 400 ms transition keeps
// frame-to-frame changes at or below 15% of the cells.
namespace {

bool same_discrete_state(const ShapingParams& p, const ShapingParams& q) {
  return p.tt_manner == q.tt_manner && p.td_manner == q.td_manner &&
         p.groove_enabled == q.groove_enabled &&
         p.lateral_lower_enabled == q.lateral_lower_enabled;
}

// largest number of cells that change between consecutive frames
int worst_flips(const PalateGeometry& g, const SoundTarget& from, const SoundTarget& to,
                double transition_ms) {
  const AnimationSpec spec{{{from, 40.0, transition_ms}, {to, 40.0, 0.0}}, 25.0};
  std::optional<EPGFrame> prev;
  int worst = 0;
  for (const auto& target : animate(spec)) {
    EPGFrame f = compute_epg(g, target.contour, target.params, 8, 8);
    if (prev) {
      int flips = 0;
      for (std::size_t k = 0; k < f.cells().size(); ++k) flips += f.cells()[k] != prev->cells()[k];
      worst = std::max(worst, flips);
    }
    prev = std::move(f);
  }
  return worst;
}

constexpr int kMaxFlips = static_cast<int>(0.15 * 64);

}  // namespace

// Pairs that share manners and flags blend purely numerically.
TEST_P(PresetPattern, NumericBlendFramesChangeGradually) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const PalateGeometry g = default_palate().with_shape(GetParam());
  int pairs = 0;
  for (const auto& from : lib.names()) {
    for (const auto& to : lib.names()) {
      if (from == to || !same_discrete_state(lib.get(from).params, lib.get(to).params)) continue;
      ++pairs;
      EXPECT_LE(worst_flips(g, lib.get(from), lib.get(to), 1000.0), kMaxFlips) << from << " -> " << to;
    }
  }
  EXPECT_EQ(pairs, 20);
}

// Every ordered preset pair. Manner and flag switches at the midpoint flip up to
// 28 cells in one frame whatever the frame rate, so this is expected to fail.
TEST_P(PresetPattern, AllPairsFramesChangeGradually) {
  const SoundLibrary lib = SoundLibrary::builtin();
  const PalateGeometry g = default_palate().with_shape(GetParam());
  for (const auto& from : lib.names()) {
    for (const auto& to : lib.names()) {
      if (from == to) continue;
      EXPECT_LE(worst_flips(g, lib.get(from), lib.get(to), 400.0), kMaxFlips) << from << " -> " << to;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothDomes, PresetPattern,
                         ::testing::Values(DomeShape::Cosine, DomeShape::HalfEllipse),
                         [](const auto& info) {
                           return info.param == DomeShape::Cosine ? std::string("Cosine")
                                                                  : std::string("HalfEllipse");
                         });
