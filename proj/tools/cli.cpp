#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "palatum/contact.hpp"
#include "palatum/dome.hpp"
#include "palatum/epg.hpp"
#include "palatum/error.hpp"
#include "palatum/render.hpp"
#include "palatum/serialization.hpp"
#include "palatum/sounds.hpp"

namespace palatum::cli {

namespace {

struct CommonOptions {
  std::string palate_path;
  std::string model;
  std::string presets_dir;
  std::string sound;
  std::string contour_path;
  std::string out = "-";
  std::string format;
  int rows = kDefaultEpgRows;
  int cols = kDefaultEpgCols;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

PalateGeometry load_geometry(const CommonOptions& o) {
  PalateGeometry geometry =
      o.palate_path.empty() ? default_palate() : palate_from_json(read_json_file(o.palate_path));
  // Flag wins over the file's shape field.
  if (!o.model.empty()) geometry = geometry.with_shape(parse_dome_shape(o.model));
  return geometry;
}

SoundLibrary load_library(const CommonOptions& o) {
  SoundLibrary lib = SoundLibrary::builtin();
  if (!o.presets_dir.empty()) lib.load_directory(o.presets_dir);
  return lib;
}

std::optional<SoundTarget> load_target(const CommonOptions& o, const PalateGeometry& geometry) {
  if (!o.sound.empty()) return load_library(o).get(o.sound);
  if (!o.contour_path.empty()) {
    return sound_target_from_json(read_json_file(o.contour_path), default_shaping_params(geometry));
  }
  return std::nullopt;
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw IoError("failed writing " + path);
}

std::string render_frame(const EPGFrame& frame, const std::string& format) {
  if (format == "txt") return epg_text(frame);
  if (format == "json") return epg_to_json(frame).dump(2) + "\n";
  if (format == "svg") return render_palatal_svg(frame);
  return render_palatal_ppm(frame);
}

void add_geometry_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--palate", o.palate_path, "Palate configuration JSON (default: built-in palate)");
  cmd.add_option("--model", o.model, "Dome model, overrides the palate file")
      ->check(CLI::IsMember({"cosine", "half_ellipse"}));
}

void add_target_options(CLI::App& cmd, CommonOptions& o) {
  auto* sound = cmd.add_option("--sound", o.sound, "Preset sound name (see list-sounds)");
  auto* contour = cmd.add_option("--contour", o.contour_path, "Sound-target JSON file");
  sound->excludes(contour);
  cmd.add_option("--presets", o.presets_dir, "Directory of extra sound-target JSON files");
}

void add_grid_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--rows", o.rows, "EPG rows (anterior to posterior)")->check(CLI::PositiveNumber);
  cmd.add_option("--cols", o.cols, "EPG columns (left to right)")->check(CLI::Range(2, 4096));
}

int run_epg(const CommonOptions& o, std::ostream& out) {
  const PalateGeometry geometry = load_geometry(o);
  const auto target = load_target(o, geometry);
  if (!target) throw UsageError("epg needs --sound or --contour");
  const EPGFrame frame = compute_epg(geometry, target->contour, target->params, o.rows, o.cols);
  emit(o.out, render_frame(frame, o.format), out);
  return kExitOk;
}

int run_slice(const CommonOptions& o, double x, std::optional<double> u_override, std::ostream& out) {
  const PalateGeometry geometry = load_geometry(o);
  double u = 0.0;
  if (u_override) {
    u = *u_override;
  } else {
    const auto target = load_target(o, geometry);
    if (!target) throw UsageError("slice needs --sound, --contour or --u");
    u = midsagittal_height(target->contour, x);
  }
  const DomeSlice slice = slice_at(geometry, x);
  if (o.format == "svg") {
    emit(o.out, render_coronal_svg(slice, u), out);
  } else {
    Json doc = {{"x", x},
                {"u", u},
                {"shape", to_string(slice.shape())},
                {"slice", {{"z_min", slice.z_min()}, {"z_max", slice.z_max()}, {"h", slice.h()}}},
                {"contact", contact_to_json(classify_slice(slice, u))}};
    emit(o.out, doc.dump(2) + "\n", out);
  }
  return kExitOk;
}

int run_mesh(const CommonOptions& o, int nx, int nz, std::ostream& out) {
  const PalateGeometry geometry = load_geometry(o);
  const auto target = load_target(o, geometry);
  std::optional<std::vector<ContactClass>> contacts;
  if (target) {
    // Midline tongue height per sampled row, the flat coronal case.
    const SurfaceGrid grid = sample_surface(geometry, nx, 1);
    contacts.emplace();
    for (int i = 0; i <= nx; ++i) {
      const double x = grid.at(i, 0).x;
      if (!target->contour.covers(x)) {
        contacts->push_back(NoContact{});
        continue;
      }
      contacts->push_back(classify_slice(slice_at(geometry, x), midsagittal_height(target->contour, x)));
    }
  }
  emit(o.out, export_obj(geometry, nx, nz, contacts), out);
  return kExitOk;
}

int run_animate(const CommonOptions& o, const std::string& spec_path, const std::string& out_dir) {
  const PalateGeometry geometry = load_geometry(o);
  const SoundLibrary lib = load_library(o);
  const AnimationSpec spec = animation_spec_from_json(read_json_file(spec_path), lib);
  const std::vector<SoundTarget> frames = animate(spec);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const EPGFrame frame = compute_epg(geometry, frames[k].contour, frames[k].params, o.rows, o.cols);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%05zu.%s", k, o.format.c_str());
    emit((std::filesystem::path(out_dir) / name).string(), render_frame(frame, o.format), std::cout);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tongue-palate contact from a parametric palatal dome", "palatum"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::Throw);
  app.require_subcommand(1);

  CommonOptions o;

  auto* epg = app.add_subcommand("epg", "EPG-like contact grid for one sound");
  add_geometry_options(*epg, o);
  add_target_options(*epg, o);
  add_grid_options(*epg, o);
  o.format = "txt";
  epg->add_option("--format", o.format, "txt, json, svg or ppm")
      ->check(CLI::IsMember({"txt", "json", "svg", "ppm"}));
  epg->add_option("--out", o.out, "Output file, '-' for standard output");

  double slice_x = 0.0;
  std::optional<double> slice_u;
  std::string slice_format = "svg";
  auto* slice = app.add_subcommand("slice", "Coronal cross-section at one x position");
  add_geometry_options(*slice, o);
  add_target_options(*slice, o);
  slice->add_option("--x", slice_x, "Anterior-posterior position (mm)")->required();
  auto* u_opt = slice->add_option("--u", slice_u, "Flat tongue elevation (mm) instead of a sound");
  u_opt->excludes("--sound")->excludes("--contour");
  slice->add_option("--format", slice_format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
  slice->add_option("--out", o.out, "Output file, '-' for standard output");

  int nx = 24;
  int nz = 16;
  std::string mesh_format = "obj";
  auto* mesh = app.add_subcommand("mesh", "Triangulated palate surface as Wavefront OBJ");
  add_geometry_options(*mesh, o);
  add_target_options(*mesh, o);
  mesh->add_option("--nx", nx, "Intervals along x")->check(CLI::PositiveNumber);
  mesh->add_option("--nz", nz, "Intervals across the dome")->check(CLI::PositiveNumber);
  mesh->add_option("--format", mesh_format, "obj")->check(CLI::IsMember({"obj"}));
  mesh->add_option("--out", o.out, "Output file, '-' for standard output");

  std::string spec_path;
  std::string out_dir;
  std::string anim_format = "svg";
  auto* anim = app.add_subcommand("animate", "Frame sequence for an animation spec");
  add_geometry_options(*anim, o);
  anim->add_option("--presets", o.presets_dir, "Directory of extra sound-target JSON files");
  add_grid_options(*anim, o);
  anim->add_option("--spec", spec_path, "Animation spec JSON")->required();
  anim->add_option("--out-dir", out_dir, "Directory receiving frame_NNNNN files")->required();
  anim->add_option("--format", anim_format, "svg, ppm, txt or json")
      ->check(CLI::IsMember({"txt", "json", "svg", "ppm"}));

  auto* list = app.add_subcommand("list-sounds", "Print the available sound names");
  list->add_option("--presets", o.presets_dir, "Directory of extra sound-target JSON files");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (epg->parsed()) return run_epg(o, out);
    if (slice->parsed()) {
      o.format = slice_format;
      return run_slice(o, slice_x, slice_u, out);
    }
    if (mesh->parsed()) return run_mesh(o, nx, nz, out);
    if (anim->parsed()) {
      o.format = anim_format;
      return run_animate(o, spec_path, out_dir);
    }
    for (const auto& name : load_library(o).names()) out << name << '\n';
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace palatum::cli
