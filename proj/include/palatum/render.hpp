#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palatum/contact.hpp"
#include "palatum/dome.hpp"
#include "palatum/epg.hpp"

namespace palatum {

struct RenderStyle {
  int width = 320;
  int height = 320;
  std::string contact_color = "#d62828";     // red, as the intersection crosses
  std::string no_contact_color = "#f2c12e";  // yellow, as the no-contact markers
  std::string outline_color = "#1f4e9c";     // blue, as the gingival ridge lines
  int precision = 3;

  /// Throws ValidationError on non-positive canvas size, a colour that is not
  /// #rrggbb, or a precision other than 3.
  void validate() const;
};

/// Palatal view: horseshoe outline with one electrode dot per cell.
std::string render_palatal_svg(const EPGFrame& frame, const RenderStyle& style = {});

/// Binary PPM (P6) raster of the palatal view.
std::string render_palatal_ppm(const EPGFrame& frame, const RenderStyle& style = {});

inline constexpr int kCoronalCurveSamples = 256;

/// Coronal cross-section with the dome curve, a flat tongue line at u and
/// markers for the contact case.
std::string render_coronal_svg(const DomeSlice& slice, double u, const RenderStyle& style = {});

/// Wavefront OBJ triangle mesh of the sampled palate. When `contacts` is
/// given it needs one entry per sampled x row (nx + 1) and each marker point
/// is written as its own vertex group named after the contact case.
std::string export_obj(const PalateGeometry& geometry, int nx, int nz,
                       const std::optional<std::vector<ContactClass>>& contacts = std::nullopt);

}  // namespace palatum
